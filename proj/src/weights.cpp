#include "hardy/weights.hpp"

#include "hardy/errors.hpp"
#include "hardy/riesz.hpp"
#include "hardy/special_fn.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hardy {

WeightSpec::WeightSpec(double sigma, double alpha) : sigma_(sigma), alpha_(alpha)
{
    if (!(sigma > 0.0 && sigma <= 1.0)) {
        throw DomainError("WeightSpec: sigma must lie in (0, 1], got " + std::to_string(sigma));
    }
    if (!(alpha > sigma && alpha < std::min(1.0 + sigma, 1.5))) {
        throw DomainError("WeightSpec: alpha must satisfy sigma < alpha < min(1 + sigma, 3/2), got " +
                          std::to_string(alpha));
    }
}

namespace weights {

WeightClassification classify(const WeightSpec& spec)
{
    const double gap = spec.alpha() - spec.critical_alpha();
    WeightClassification c;
    c.is_hardy = true;
    c.is_optimal = std::fabs(gap) <= 1e-12;
    c.is_critical = c.is_optimal || gap < 0.0;
    return c;
}

double hardy_weight_closed_form(const WeightSpec& spec, std::size_t n)
{
    const double s = spec.sigma();
    const double a = spec.alpha();
    const double dn = static_cast<double>(n);
    return psi_constant(s, a) * special::gamma_ratio(dn + a - s - 1.0, dn + a - 1.0) *
           special::gamma_ratio(dn - a + 2.0, dn - a + s + 2.0);
}

double hardy_weight(const WeightSpec& spec, std::size_t n)
{
    if (n < 1) {
        throw DomainError("hardy_weight: n starts at 1");
    }
    const double ratio = riesz::riesz_potential(RieszIndex(spec.alpha() - spec.sigma()), n) /
                         riesz::riesz_potential(RieszIndex(spec.alpha()), n);
    const double closed = hardy_weight_closed_form(spec, n);
    if (std::fabs(ratio - closed) > 1e-10 * std::fabs(closed)) {
        throw InternalInconsistency("hardy_weight: Riesz ratio " + std::to_string(ratio) + " and closed form " +
                                    std::to_string(closed) + " disagree at n = " + std::to_string(n));
    }
    return ratio;
}

double optimal_weight(double sigma, std::size_t n)
{
    const WeightSpec spec(sigma, 0.75 + 0.5 * sigma);
    return hardy_weight(spec, n);
}

double kpp_weight(std::size_t n)
{
    if (n < 1) {
        throw DomainError("kpp_weight: n starts at 1");
    }
    // 2 - sqrt(1+x) - sqrt(1-x) = 2x^2 / ((sqrt(1+x) + sqrt(1-x)) (1 + sqrt(1-x)) (1 + sqrt(1+x)))
    const double x = 1.0 / static_cast<double>(n);
    const double p = std::sqrt(1.0 + x);
    const double m = std::sqrt(1.0 - x);
    return 2.0 * x * x / ((p + m) * (1.0 + m) * (1.0 + p));
}

double psi_constant(double sigma, double alpha)
{
    if (!(sigma > 0.0 && alpha > sigma && alpha < 1.5)) {
        throw DomainError("psi_constant: need 0 < sigma < alpha < 3/2");
    }
    return std::pow(4.0, sigma) * special::gamma_ratio(1.5 - alpha + sigma, 1.5 - alpha) *
           special::gamma_ratio(alpha, alpha - sigma);
}

double psi_log_derivative(double sigma, double alpha)
{
    if (!(sigma > 0.0 && alpha > sigma && alpha < 1.5)) {
        throw DomainError("psi_log_derivative: need 0 < sigma < alpha < 3/2");
    }
    return special::digamma(alpha) - special::digamma(alpha - sigma) - special::digamma(1.5 - alpha + sigma) +
           special::digamma(1.5 - alpha);
}

double critical_constant(double sigma)
{
    if (!(sigma > 0.0 && sigma <= 1.0)) {
        throw DomainError("critical_constant: sigma must lie in (0, 1]");
    }
    const double r = special::gamma_ratio(0.75 + 0.5 * sigma, 0.75 - 0.5 * sigma);
    return std::pow(4.0, sigma) * r * r;
}

WeightComparison weight_comparison(std::size_t n_max)
{
    if (n_max < 2) {
        throw DomainError("weight_comparison: n_max must be at least 2");
    }
    WeightComparison out;
    out.rows.reserve(n_max);
    for (std::size_t n = 1; n <= n_max; ++n) {
        ComparisonRow row{n, kpp_weight(n), optimal_weight(1.0, n), 0.0};
        row.diff = row.op1 - row.kpp;
        if (!out.first_crossing && row.op1 > row.kpp) {
            out.first_crossing = n;
        }
        out.rows.push_back(row);
    }
    out.kpp_above_at_one = out.rows.front().kpp > out.rows.front().op1;
    if (out.first_crossing) {
        out.op_above_after_crossing =
            std::all_of(out.rows.begin() + static_cast<std::ptrdiff_t>(*out.first_crossing - 1), out.rows.end(),
                        [](const ComparisonRow& r) { return r.op1 > r.kpp; });
    }
    return out;
}

std::vector<WeightSpec> admissible_grid()
{
    std::vector<WeightSpec> out;
    for (double s : {0.2, 0.4, 0.6, 0.8, 1.0}) {
        const double top = std::min(1.0 + s, 1.5);
        for (int i = 1; i <= 5; ++i) {
            out.emplace_back(s, s + (top - s) * i / 6.0);
        }
    }
    return out;
}

} // namespace weights
} // namespace hardy
