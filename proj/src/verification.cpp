#include "hardy/verification.hpp"

#include "hardy/errors.hpp"
#include "hardy/quadrature.hpp"
#include "hardy/riesz.hpp"
#include "hardy/special_fn.hpp"
#include "hardy/summation.hpp"
#include "hardy/weights.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

namespace hardy {

ResidualRecord make_record(std::string name, std::map<std::string, double> parameters, double lhs, double rhs,
                           double tolerance)
{
    ResidualRecord r;
    r.name = std::move(name);
    r.parameters = std::move(parameters);
    r.lhs = lhs;
    r.rhs = rhs;
    r.abs_residual = std::fabs(lhs - rhs);
    r.tolerance = tolerance;
    r.pass = r.abs_residual <= tolerance;
    return r;
}

namespace verification {

namespace {

using special::binomial_real;
using special::gamma;
using special::gamma_ratio;
using special::inv_gamma;
using special::is_nonpositive_integer;

constexpr double lemma_rel_tol = 1e-10;

double sign_of_power(long long k)
{
    return (k % 2 == 0) ? 1.0 : -1.0;
}

void require_regular_gamma2s(double sigma, const char* name)
{
    if (is_nonpositive_integer(2.0 * sigma)) {
        throw PoleConfiguration(std::string(name) + ": Gamma(2 sigma) is a pole at sigma = " +
                                std::to_string(sigma));
    }
}

ResidualRecord lemma_record(const char* name, std::map<std::string, double> params, double lhs, double rhs)
{
    return make_record(name, std::move(params), lhs, rhs, lemma_rel_tol * std::max(1.0, std::fabs(rhs)));
}

} // namespace

ResidualRecord lemma_sum1_residual(double sigma, std::size_t n)
{
    require_regular_gamma2s(sigma, "lemma_sum1");
    if (n < 1) {
        throw DomainError("lemma_sum1: n starts at 1");
    }
    CompensatedSum lhs;
    for (std::size_t m = 0; m < n; ++m) {
        lhs.add(sign_of_power(static_cast<long long>(m)) * binomial_real(2.0 * sigma, sigma + static_cast<double>(m)));
    }
    const double g2s = gamma(2.0 * sigma);
    const double dn = static_cast<double>(n);
    const double rhs = g2s * inv_gamma(sigma) * inv_gamma(sigma + 1.0) +
                       sign_of_power(static_cast<long long>(n) - 1) * g2s * inv_gamma(sigma + dn) *
                           inv_gamma(sigma - dn + 1.0);
    return lemma_record("lemma_sum1", {{"sigma", sigma}, {"n", dn}}, lhs.value(), rhs);
}

ResidualRecord lemma_sum2_residual(double sigma, std::size_t n)
{
    require_regular_gamma2s(sigma, "lemma_sum2");
    if (n < 1) {
        throw DomainError("lemma_sum2: n starts at 1");
    }
    CompensatedSum lhs;
    for (std::size_t m = 0; m < n; ++m) {
        lhs.add(sign_of_power(static_cast<long long>(m) + 1) *
                binomial_real(2.0 * sigma, sigma + static_cast<double>(m) + 1.0));
    }
    const double g2s = gamma(2.0 * sigma);
    const double dn = static_cast<double>(n);
    const double rhs = -g2s * inv_gamma(sigma) * inv_gamma(sigma + 1.0) +
                       sign_of_power(static_cast<long long>(n)) * g2s * inv_gamma(sigma - dn) *
                           inv_gamma(sigma + dn + 1.0);
    return lemma_record("lemma_sum2", {{"sigma", sigma}, {"n", dn}}, lhs.value(), rhs);
}

ResidualRecord lemma_potential_sum_residual(double sigma, std::size_t n)
{
    require_regular_gamma2s(sigma, "lemma_potential_sum");
    if (n < 1) {
        throw DomainError("lemma_potential_sum: n starts at 1");
    }
    const long long nn = static_cast<long long>(n);
    CompensatedSum lhs;
    for (long long m = -nn + 1; m <= nn; ++m) {
        lhs.add(sign_of_power(m < 0 ? -m : m) * binomial_real(2.0 * sigma, sigma + static_cast<double>(m)));
    }
    const double dn = static_cast<double>(n);
    const double rhs = -2.0 * sign_of_power(nn) * dn * gamma(2.0 * sigma) * inv_gamma(1.0 + sigma - dn) *
                       inv_gamma(1.0 + sigma + dn);
    return lemma_record("lemma_potential_sum", {{"sigma", sigma}, {"n", dn}}, lhs.value(), rhs);
}

ResidualRecord lemma_simpriesz_residual(double alpha, std::size_t n)
{
    if (n < 1) {
        throw DomainError("lemma_simpriesz: n starts at 1");
    }
    const double dn = static_cast<double>(n);
    const double args[] = {alpha - dn - 1.0, -dn - alpha, alpha + dn - 1.0, dn - alpha, dn + alpha - 1.0,
                           dn - alpha + 2.0};
    for (double x : args) {
        if (is_nonpositive_integer(x)) {
            throw PoleConfiguration("lemma_simpriesz: a Gamma argument is a pole at alpha = " +
                                    std::to_string(alpha) + ", n = " + std::to_string(n));
        }
    }
    const double lhs = gamma_ratio(alpha - dn - 1.0, -dn - alpha) - gamma_ratio(alpha + dn - 1.0, dn - alpha);
    const double rhs = gamma_ratio(dn + alpha - 1.0, dn - alpha + 2.0) * 2.0 * dn * (2.0 * alpha - 1.0);
    return lemma_record("lemma_simpriesz", {{"alpha", alpha}, {"n", dn}}, lhs, rhs);
}

double j_beta(double beta, std::size_t m)
{
    if (!(beta > 0.0 && beta < 1.5)) {
        throw DomainError("j_beta: beta must lie in (0, 3/2)");
    }
    if (beta == 0.5) {
        throw DomainError("j_beta: tan(pi beta) has a pole at beta = 1/2");
    }
    if (m < 1) {
        throw DomainError("j_beta: m starts at 1");
    }
    const double dm = static_cast<double>(m);
    if (beta == 1.0) {
        return 2.0 * std::numbers::pi * dm;
    }
    // (b)_{2m} / (1-b)_{2m} = Gamma(b+2m)/Gamma(1-b+2m) * Gamma(1-b)/Gamma(b)
    const double ratio = gamma_ratio(beta + 2.0 * dm, 1.0 - beta + 2.0 * dm) * gamma_ratio(1.0 - beta, beta);
    const double tan = special::sin_pi(beta) / special::cos_pi(beta);
    return tan * (1.0 - ratio);
}

double J_beta_closed(double beta, std::size_t m)
{
    const double g = gamma_ratio(beta, 2.0 * beta) * gamma(beta);
    return std::pow(2.0, beta - 2.0) * g * j_beta(beta, m);
}

double J_beta_oracle(double beta, std::size_t m, double tol)
{
    if (!(beta > 0.0 && beta < 1.5)) {
        throw DomainError("J_beta_oracle: beta must lie in (0, 3/2)");
    }
    if (m < 1) {
        throw DomainError("J_beta_oracle: m starts at 1");
    }
    const double dm = static_cast<double>(m);
    auto f = [=](double t) {
        const double h = std::sin(0.5 * t);
        const double s = std::sin(dm * t);
        return s * s * std::pow(2.0 * h * h, -beta);
    };
    special::EndpointSingularity sing;
    sing.lower = 2.0 - 2.0 * beta;
    special::QuadOptions options;
    options.initial_panels = std::max<std::size_t>(16, 2 * m);
    return special::quad_adaptive(f, 0.0, std::numbers::pi, tol, sing, options).value;
}

SeededUniform::SeededUniform(std::uint64_t seed) : state_(seed) {}

double SeededUniform::next()
{
    // splitmix64
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return static_cast<double>(z >> 11) * 0x1.0p-53;
}

double draw_off_lattice(SeededUniform& rng, double lo, double hi, double lattice, double gap)
{
    for (int attempt = 0; attempt < 10000; ++attempt) {
        const double x = rng.next(lo, hi);
        const double r = x / lattice;
        if (std::fabs(r - std::round(r)) * lattice >= gap) {
            return x;
        }
    }
    throw DomainError("draw_off_lattice: interval too small to avoid the lattice");
}

std::vector<ResidualRecord> appendix_suite(std::uint64_t seed, std::size_t draws, std::size_t n_max)
{
    SeededUniform rng(seed);
    auto draw_n = [&] { return 1 + std::min<std::size_t>(n_max - 1, static_cast<std::size_t>(rng.next() * n_max)); };
    std::vector<ResidualRecord> out;
    // sigma avoids half-integers (poles of Gamma(2 sigma), Gamma(sigma + k));
    // alpha avoids integers (poles of every Gamma argument in the last identity).
    for (std::size_t i = 0; i < draws; ++i) {
        const double s = draw_off_lattice(rng, -1.5, 1.5, 0.5);
        out.push_back(lemma_sum1_residual(s, draw_n()));
    }
    for (std::size_t i = 0; i < draws; ++i) {
        const double s = draw_off_lattice(rng, -1.5, 1.5, 0.5);
        out.push_back(lemma_sum2_residual(s, draw_n()));
    }
    for (std::size_t i = 0; i < draws; ++i) {
        const double s = draw_off_lattice(rng, -1.5, 1.5, 0.5);
        out.push_back(lemma_potential_sum_residual(s, draw_n()));
    }
    for (std::size_t i = 0; i < draws; ++i) {
        const double a = draw_off_lattice(rng, -1.5, 2.5, 1.0);
        out.push_back(lemma_simpriesz_residual(a, draw_n()));
    }
    return out;
}

std::vector<ResidualRecord> j_beta_suite(std::size_t m_max)
{
    std::vector<ResidualRecord> out;
    for (double beta : {0.25, 0.4, 0.75, 1.1}) {
        for (std::size_t m = 1; m <= m_max; ++m) {
            const double closed = J_beta_closed(beta, m);
            const double quad = J_beta_oracle(beta, m, 1e-10 * std::max(1.0, std::fabs(closed)));
            out.push_back(make_record("J_beta", {{"beta", beta}, {"m", static_cast<double>(m)}}, quad, closed,
                                      1e-7 * std::fabs(closed)));
        }
    }
    // beta = 1/2: J grows like log m, so equal steps in log m give equal increments.
    const double j10 = J_beta_oracle(0.5, 10, 1e-10);
    const double j100 = J_beta_oracle(0.5, 100, 1e-10);
    const double j1000 = J_beta_oracle(0.5, 1000, 1e-10);
    const double first = j100 - j10;
    const double second = j1000 - 2.0 * j100 + j10;
    out.push_back(make_record("J_half_log_growth", {{"beta", 0.5}, {"J10", j10}, {"J100", j100}, {"J1000", j1000}},
                              std::fabs(second), 0.0, first > 0.0 ? 0.1 * first : -1.0));
    return out;
}

std::vector<ResidualRecord> sign_suite(std::size_t N)
{
    std::vector<ResidualRecord> out;
    const double dN = static_cast<double>(N);
    for (double s : {0.25, 0.5, 1.0}) {
        const auto scan = kernel::kernel_sign_scan(FracExponent(s), N);
        out.push_back(make_record("offdiag_nonpositive", {{"sigma", s}, {"N", dN}},
                                  scan.all_offdiag_nonpositive ? 1.0 : 0.0, 1.0, 0.0));
    }
    const FracExponent above(1.25);
    const auto scan = kernel::kernel_sign_scan(above, N);
    out.push_back(make_record("offdiag_nonpositive", {{"sigma", 1.25}, {"N", dN}},
                              scan.all_offdiag_nonpositive ? 1.0 : 0.0, 0.0, 0.0));
    // Above sigma = 1 the nearest-neighbour entries stay negative; the
    // positive entries sit at distance two or more.
    bool adjacent_negative = true;
    for (std::size_t m = 1; m < N; ++m) {
        adjacent_negative = adjacent_negative && kernel::kernel_entry(above, m, m + 1) < 0.0;
    }
    out.push_back(make_record("adjacent_offdiag_negative", {{"sigma", 1.25}, {"N", dN}},
                              adjacent_negative ? 1.0 : 0.0, 1.0, 0.0));
    double gap = -1.0;
    std::map<std::string, double> params{{"sigma", 1.25}, {"N", dN}};
    if (scan.witness) {
        const auto& w = *scan.witness;
        gap = static_cast<double>(w.m > w.n ? w.m - w.n : w.n - w.m);
        params["m"] = static_cast<double>(w.m);
        params["n"] = static_cast<double>(w.n);
        params["value"] = w.value;
    }
    out.push_back(make_record("first_positive_witness_distance", std::move(params), gap, 2.0, 0.0));
    return out;
}

std::vector<ResidualRecord> mellin_suite(std::size_t n_last, const TruncationPolicy& policy)
{
    std::vector<ResidualRecord> out;
    const std::pair<double, double> grid[] = {{1.0, 1.25}, {0.5, 1.0}, {0.75, 1.2}};
    for (const auto& [s, a] : grid) {
        const auto rs = riesz::mellin_identity_residuals(FracExponent(s), RieszIndex(a), n_last, policy);
        for (std::size_t i = 0; i < rs.size(); ++i) {
            const auto& r = rs[i];
            out.push_back(make_record("mellin_identity",
                                      {{"sigma", s},
                                       {"alpha", a},
                                       {"n", static_cast<double>(i + 1)},
                                       {"n_max", static_cast<double>(r.n_max)},
                                       {"tail_lower", r.tail.lower},
                                       {"tail_upper", r.tail.upper}},
                                      r.lhs, r.rhs, std::max(1e-3 * std::fabs(r.rhs), r.tail.magnitude())));
        }
    }
    return out;
}

std::vector<ResidualRecord> asymptotics_suite()
{
    constexpr std::size_t n = 10000;
    const double dn = static_cast<double>(n);
    std::vector<ResidualRecord> out;
    for (double a : {0.5, 0.75, 1.25}) {
        const RieszIndex alpha(a);
        const double ratio = riesz::riesz_potential(alpha, n) * std::pow(dn, 2.0 - 2.0 * a) /
                             riesz::riesz_asymptotic_constant(alpha);
        out.push_back(make_record("riesz_asymptotic_ratio", {{"alpha", a}, {"n", dn}}, ratio, 1.0, 0.02));
    }
    for (const auto& spec : weights::admissible_grid()) {
        const double ratio = weights::hardy_weight(spec, n) * std::pow(dn, 2.0 * spec.sigma()) /
                             weights::psi_constant(spec.sigma(), spec.alpha());
        out.push_back(make_record("weight_asymptotic_ratio",
                                  {{"sigma", spec.sigma()}, {"alpha", spec.alpha()}, {"n", dn}}, ratio, 1.0, 0.02));
    }
    return out;
}

} // namespace verification
} // namespace hardy
