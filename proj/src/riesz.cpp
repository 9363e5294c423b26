#include "hardy/riesz.hpp"

#include "hardy/errors.hpp"
#include "hardy/quadrature.hpp"
#include "hardy/special_fn.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace hardy {

RieszIndex::RieszIndex(double alpha) : alpha_(alpha)
{
    if (!(alpha > 0.0 && alpha < 1.5)) {
        throw DomainError("alpha must lie in (0, 3/2), got " + std::to_string(alpha));
    }
}

namespace riesz {

namespace {

// 4 / (4^a sqrt 2) * Gamma(3/2 - a) / Gamma(a)
double prefactor(double a)
{
    return 4.0 / (std::pow(4.0, a) * std::numbers::sqrt2) * special::gamma(1.5 - a) * special::inv_gamma(a);
}

double potential_with(double pre, double a, std::size_t n)
{
    const double dn = static_cast<double>(n);
    return pre * dn * special::gamma_ratio(dn + a - 1.0, dn - a + 2.0);
}

double riesz_integral(double a, double eps, std::size_t n, double tol)
{
    const double dn = static_cast<double>(n);
    const double scale = std::sqrt(2.0 / std::numbers::pi);
    auto f = [=](double t) {
        const double h = std::sin(0.5 * t);
        return std::sin(dn * t) * std::sin(t) * std::pow(2.0 * (eps + 2.0 * h * h), -a);
    };
    special::EndpointSingularity sing;
    sing.lower = eps > 0.0 ? 2.0 : 2.0 - 2.0 * a;
    return scale * special::quad_adaptive(f, 0.0, std::numbers::pi, 0.5 * tol / scale, sing).value;
}

void check_mellin_parameters(double s, double a)
{
    if (!(s < a && a < 1.0 + s)) {
        throw DomainError("mellin identity needs sigma < alpha < 1 + sigma (sigma = " + std::to_string(s) +
                          ", alpha = " + std::to_string(a) + ")");
    }
}

MellinResidual finish(const TailedValue& tv, double rhs)
{
    MellinResidual r;
    r.lhs = tv.value;
    r.rhs = rhs;
    r.residual = tv.value - rhs;
    r.tail = tv.tail;
    r.n_max = tv.cutoff;
    return r;
}

} // namespace

bool MellinResidual::covered(double rel) const
{
    if (std::fabs(residual) <= rel * std::fabs(rhs)) {
        return true;
    }
    return -residual >= tail.lower && -residual <= tail.upper;
}

double riesz_potential(const RieszIndex& alpha, std::size_t n)
{
    if (n < 1) {
        throw DomainError("riesz_potential: n starts at 1");
    }
    return potential_with(prefactor(alpha.value()), alpha.value(), n);
}

std::vector<double> tabulate(const RieszIndex& alpha, std::size_t N)
{
    const double a = alpha.value();
    const double pre = prefactor(a);
    std::vector<double> out(N);
    for (std::size_t n = 1; n <= N; ++n) {
        out[n - 1] = potential_with(pre, a, n);
    }
    return out;
}

double riesz_oracle(const RieszIndex& alpha, std::size_t n, double tol)
{
    if (n < 1) {
        throw DomainError("riesz_oracle: n starts at 1");
    }
    return riesz_integral(alpha.value(), 0.0, n, tol);
}

double riesz_regularized(const RieszIndex& alpha, double epsilon, std::size_t n, double tol)
{
    if (!(epsilon > 0.0)) {
        throw DomainError("riesz_regularized: epsilon must be positive");
    }
    if (n < 1) {
        throw DomainError("riesz_regularized: n starts at 1");
    }
    return riesz_integral(alpha.value(), epsilon, n, tol);
}

double green_function(const FracExponent& sigma, std::size_t n)
{
    if (!sigma.graph_representable()) {
        throw DomainError("green_function: defined here only for sigma <= 1");
    }
    return std::sqrt(2.0 / std::numbers::pi) * riesz_potential(RieszIndex(sigma.value()), n);
}

double riesz_asymptotic_constant(const RieszIndex& alpha)
{
    const double a = alpha.value();
    return 2.0 * std::numbers::sqrt2 * std::pow(4.0, -a) * special::gamma(1.5 - a) * special::inv_gamma(a);
}

MellinResidual mellin_identity_residual(const FracExponent& sigma, const RieszIndex& alpha, std::size_t n,
                                        const TruncationPolicy& policy)
{
    const double s = sigma.value();
    const double a = alpha.value();
    check_mellin_parameters(s, a);
    const RieszIndex target(a - s);
    const double e = 2.0 * a - 2.0;
    const double rhs = riesz_potential(target, n);
    std::size_t N = std::min<std::size_t>(4096, policy.n_max);
    for (;;) {
        check_tail_admissible(s, e, n, N, policy);
        const auto g = tabulate(alpha, N);
        const kernel::CoefficientTable table(s, N + n);
        const auto tv = kernel::apply_operator_tabulated_unchecked(table, g, e, n, policy);
        if (tv.tail.width() <= policy.tail_tol) {
            return finish(tv, rhs);
        }
        if (N >= policy.n_max) {
            throw PolicyRejected("mellin_identity_residual: tail width " + std::to_string(tv.tail.width()) +
                                 " above tail_tol at n_max = " + std::to_string(policy.n_max));
        }
        N = std::min(4 * N, policy.n_max);
    }
}

std::vector<MellinResidual> mellin_identity_residuals(const FracExponent& sigma, const RieszIndex& alpha,
                                                      std::size_t n_last, const TruncationPolicy& policy)
{
    const double s = sigma.value();
    const double a = alpha.value();
    check_mellin_parameters(s, a);
    if (n_last < 1) {
        throw DomainError("mellin_identity_residuals: n_last must be positive");
    }
    const RieszIndex target(a - s);
    const double e = 2.0 * a - 2.0;
    std::size_t N = std::min<std::size_t>(4096, policy.n_max);
    for (;;) {
        check_tail_admissible(s, e, n_last, N, policy);
        const auto g = tabulate(alpha, N);
        const kernel::CoefficientTable table(s, N + n_last);
        std::vector<MellinResidual> out;
        bool ok = true;
        for (std::size_t n = 1; n <= n_last; ++n) {
            const auto tv = kernel::apply_operator_tabulated_unchecked(table, g, e, n, policy);
            ok = ok && tv.tail.width() <= policy.tail_tol;
            out.push_back(finish(tv, riesz_potential(target, n)));
        }
        if (ok) {
            return out;
        }
        if (N >= policy.n_max) {
            throw PolicyRejected("mellin_identity_residuals: tail above tail_tol at n_max = " +
                                 std::to_string(policy.n_max));
        }
        N = std::min(4 * N, policy.n_max);
    }
}

} // namespace riesz
} // namespace hardy
