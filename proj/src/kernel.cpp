#include "hardy/kernel.hpp"

#include "hardy/errors.hpp"
#include "hardy/quadrature.hpp"
#include "hardy/special_fn.hpp"
#include "hardy/summation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace hardy {

FracExponent::FracExponent(double sigma) : sigma_(sigma)
{
    if (!(sigma > 0.0 && sigma < 1.5)) {
        throw DomainError("sigma must lie in (0, 3/2), got " + std::to_string(sigma));
    }
}

LatticeFunction::LatticeFunction(std::size_t support_start, std::vector<double> values)
    : start_(support_start), values_(std::move(values))
{
    if (support_start < 1) {
        throw DomainError("LatticeFunction: support_start must be >= 1");
    }
    for (double v : values_) {
        if (!std::isfinite(v)) {
            throw DomainError("LatticeFunction: values must be finite");
        }
    }
}

LatticeFunction LatticeFunction::unit(std::size_t n)
{
    return LatticeFunction(n, {1.0});
}

double LatticeFunction::operator()(std::size_t n) const
{
    if (n < start_ || n - start_ >= values_.size()) {
        return 0.0;
    }
    return values_[n - start_];
}

void TruncationPolicy::validate() const
{
    if (n_max < 1) {
        throw DomainError("TruncationPolicy: n_max must be positive");
    }
    if (!(tail_tol > 0.0)) {
        throw DomainError("TruncationPolicy: tail_tol must be positive");
    }
    if (!std::isfinite(tail_exponent_margin)) {
        throw DomainError("TruncationPolicy: tail_exponent_margin must be finite");
    }
}

double TailInterval::magnitude() const
{
    return std::max(std::fabs(lower), std::fabs(upper));
}

TailInterval TailInterval::scaled(double factor) const
{
    if (factor >= 0.0) {
        return {lower * factor, upper * factor};
    }
    return {upper * factor, lower * factor};
}

TailInterval& TailInterval::operator+=(const TailInterval& other)
{
    lower += other.lower;
    upper += other.upper;
    return *this;
}

bool TailedValue::brackets(double x, double slack) const
{
    return x >= value + tail.lower - slack && x <= value + tail.upper + slack;
}

TailEstimator::TailEstimator(double sigma, std::size_t n, std::size_t cutoff, double exponent,
                             std::size_t max_samples)
    : sigma_(sigma), n_(n), cutoff_(cutoff), window_first_(std::max<std::size_t>(cutoff / 2, 1)),
      exponent_(exponent)
{
    const std::size_t span = cutoff_ >= window_first_ ? cutoff_ - window_first_ + 1 : 1;
    if (max_samples > 0 && span > max_samples) {
        stride_ = (span + max_samples - 1) / max_samples;
    }
}

void TailEstimator::observe(std::size_t m, double term)
{
    if (!in_window(m) || term == 0.0) {
        return;
    }
    const double d = static_cast<double>(m > n_ ? m - n_ : n_ - m);
    const double model = std::pow(d, -2.0 * sigma_ - 2.0) * std::pow(static_cast<double>(m), exponent_);
    prefactor_ = std::max(prefactor_, 2.0 * std::fabs(term) / model);
    (term > 0.0 ? seen_positive_ : seen_negative_) = true;
}

TailInterval TailEstimator::interval() const
{
    if (prefactor_ == 0.0) {
        return {};
    }
    const double N = static_cast<double>(cutoff_);
    const double gap = 2.0 * sigma_ + 1.0 - exponent_;
    const double bound = prefactor_ * std::pow(1.0 - static_cast<double>(n_) / N, -2.0 * sigma_ - 2.0) *
                         std::pow(N, -gap) / gap;
    if (seen_positive_ && !seen_negative_) {
        return {0.0, bound};
    }
    if (seen_negative_ && !seen_positive_) {
        return {-bound, 0.0};
    }
    return {-bound, bound};
}

void check_tail_admissible(double sigma, double exponent, std::size_t n, std::size_t cutoff,
                           const TruncationPolicy& policy)
{
    policy.validate();
    if (!(2.0 * sigma - exponent > policy.tail_exponent_margin)) {
        throw PolicyRejected("tail with growth exponent " + std::to_string(exponent) +
                             " is not summable against the sigma = " + std::to_string(sigma) +
                             " kernel (need 2 sigma - e > " + std::to_string(policy.tail_exponent_margin) + ")");
    }
    if (cutoff < 2 * n + 2) {
        throw PolicyRejected("cutoff " + std::to_string(cutoff) + " too small for row n = " + std::to_string(n) +
                             " (need at least 2n + 2)");
    }
}

namespace kernel {

double coefficient(double sigma, std::size_t k)
{
    const double b = special::binomial_real(2.0 * sigma, sigma + static_cast<double>(k));
    return (k % 2 == 0) ? b : -b;
}

CoefficientTable::CoefficientTable(double sigma, std::size_t kmax) : sigma_(sigma), c_(kmax + 1)
{
    for (std::size_t k = 0; k <= kmax; ++k) {
        c_[k] = coefficient(sigma, k);
    }
}

double kernel_entry(const FracExponent& sigma, std::size_t m, std::size_t n)
{
    if (m < 1 || n < 1) {
        throw DomainError("kernel_entry: indices start at 1");
    }
    const double s = sigma.value();
    return coefficient(s, m > n ? m - n : n - m) - coefficient(s, m + n);
}

double kernel_entry_oracle(const FracExponent& sigma, std::size_t m, std::size_t n, double tol)
{
    if (m < 1 || n < 1) {
        throw DomainError("kernel_entry_oracle: indices start at 1");
    }
    const double s = sigma.value();
    const double scale = std::pow(2.0, s + 1.0) / std::numbers::pi;
    const double dm = static_cast<double>(m);
    const double dn = static_cast<double>(n);
    auto f = [=](double t) {
        const double h = std::sin(0.5 * t);
        return std::pow(2.0 * h * h, s) * std::sin(dm * t) * std::sin(dn * t);
    };
    special::EndpointSingularity sing;
    sing.lower = 2.0 * s + 2.0;
    const auto r = special::quad_adaptive(f, 0.0, std::numbers::pi, 0.5 * tol / scale, sing);
    return scale * r.value;
}

double potential_term(const FracExponent& sigma, std::size_t n)
{
    if (n < 1) {
        throw DomainError("potential_term: n starts at 1");
    }
    const double s = sigma.value();
    const double dn = static_cast<double>(n);
    const double lower = 1.0 + s - dn;
    if (lower < 0.0 && !special::is_nonpositive_integer(lower)) {
        // Reflection of 1/Gamma(1 + sigma - n) gives the sin(pi sigma) form.
        return 2.0 / std::numbers::pi * special::gamma(2.0 * s) * special::sin_pi(s) * dn *
               special::gamma_ratio(dn - s, 1.0 + s + dn);
    }
    const double sign = (n % 2 == 0) ? -1.0 : 1.0; // -(-1)^n
    return 2.0 * sign * dn * special::gamma(2.0 * s) * special::inv_gamma(lower) *
           special::inv_gamma(1.0 + s + dn);
}

TailedValue potential_oracle(const FracExponent& sigma, std::size_t n, const TruncationPolicy& policy)
{
    const std::size_t N = policy.n_max;
    const double s = sigma.value();
    check_tail_admissible(s, 0.0, n, N, policy);
    const CoefficientTable table(s, N + n);
    CompensatedSum sum;
    TailEstimator tail(s, n, N, 0.0);
    for (std::size_t m = 1; m <= N; ++m) {
        const double k = table.entry(m, n);
        sum.add(k);
        tail.observe(m, k);
    }
    TailedValue out{sum.value(), tail.interval(), N};
    if (out.tail.width() > policy.tail_tol) {
        throw PolicyRejected("potential_oracle: tail width " + std::to_string(out.tail.width()) +
                             " exceeds tail_tol at n_max = " + std::to_string(N));
    }
    return out;
}

LatticeFunction apply_operator(const FracExponent& sigma, const LatticeFunction& f, IndexRange window)
{
    if (window.first < 1 || window.last < window.first) {
        throw DomainError("apply_operator: window must satisfy 1 <= first <= last");
    }
    std::vector<double> out(window.last - window.first + 1, 0.0);
    if (f.empty()) {
        return LatticeFunction(window.first, std::move(out));
    }
    const CoefficientTable table(sigma.value(), window.last + f.support_last());
    for (std::size_t n = window.first; n <= window.last; ++n) {
        double acc = 0.0;
        for (std::size_t m = f.support_start(); m <= f.support_last(); ++m) {
            acc += table.entry(m, n) * f(m);
        }
        out[n - window.first] = acc;
    }
    return LatticeFunction(window.first, std::move(out));
}

TailedValue apply_operator_tabulated_unchecked(const CoefficientTable& table, std::span<const double> g,
                                               double tail_exponent, std::size_t n,
                                               const TruncationPolicy& policy)
{
    const std::size_t N = g.size();
    const double s = table.sigma();
    check_tail_admissible(s, tail_exponent, n, N, policy);
    if (table.kmax() < N + n) {
        throw DomainError("apply_operator_tabulated: coefficient table too short");
    }
    CompensatedSum sum;
    TailEstimator tail(s, n, N, tail_exponent);
    for (std::size_t m = 1; m <= N; ++m) {
        const double term = table.entry(m, n) * g[m - 1];
        sum.add(term);
        tail.observe(m, term);
    }
    return {sum.value(), tail.interval(), N};
}

TailedValue apply_operator_tabulated(const FracExponent& sigma, std::span<const double> g, double tail_exponent,
                                     std::size_t n, const TruncationPolicy& policy)
{
    check_tail_admissible(sigma.value(), tail_exponent, n, g.size(), policy);
    const CoefficientTable table(sigma.value(), g.size() + n);
    auto out = apply_operator_tabulated_unchecked(table, g, tail_exponent, n, policy);
    if (out.tail.width() > policy.tail_tol) {
        throw PolicyRejected("apply_operator_tabulated: tail width " + std::to_string(out.tail.width()) +
                             " exceeds tail_tol with N = " + std::to_string(g.size()));
    }
    return out;
}

QuadraticForm quadratic_form(const FracExponent& sigma, const LatticeFunction& f, const TruncationPolicy& policy)
{
    policy.validate();
    QuadraticForm out;
    if (f.empty()) {
        return out;
    }
    const double s = sigma.value();
    const std::size_t first = f.support_start();
    const std::size_t last = f.support_last();
    const std::size_t M = std::max(policy.n_max, 2 * last + 2);
    const CoefficientTable table(s, M + last);

    CompensatedSum direct;
    for (std::size_t n = first; n <= last; ++n) {
        for (std::size_t m = first; m <= last; ++m) {
            direct.add(f(n) * table.entry(m, n) * f(m));
        }
    }

    CompensatedSum graph;
    for (std::size_t n = first; n <= last; ++n) {
        for (std::size_t m = n + 1; m <= last; ++m) {
            const double d = f(m) - f(n);
            graph.add(-table.entry(m, n) * d * d);
        }
    }
    TailInterval tail;
    for (std::size_t n = first; n <= last; ++n) {
        const double fn2 = f(n) * f(n);
        if (fn2 == 0.0) {
            continue;
        }
        CompensatedSum row;
        TailEstimator est(s, n, M, 0.0);
        for (std::size_t m = 1; m < first; ++m) {
            row.add(-table.entry(m, n));
        }
        for (std::size_t m = last + 1; m <= M; ++m) {
            const double w = -table.entry(m, n);
            row.add(w);
            est.observe(m, w);
        }
        graph.add(fn2 * row.value());
        graph.add(fn2 * potential_term(sigma, n));
        tail += est.interval().scaled(fn2);
    }
    if (tail.width() > policy.tail_tol) {
        throw PolicyRejected("quadratic_form: tail width " + std::to_string(tail.width()) +
                             " exceeds tail_tol with cutoff " + std::to_string(M));
    }

    out.value = graph.value();
    out.direct = direct.value();
    out.tail = tail;
    out.cutoff = M;
    out.tolerance = 1e-12 * std::max(1.0, direct.abs_total() + graph.abs_total());
    const double diff = out.direct - out.value;
    if (!(diff >= tail.lower - out.tolerance && diff <= tail.upper + out.tolerance)) {
        throw InternalInconsistency("quadratic_form: direct " + std::to_string(out.direct) + " and graph form " +
                                    std::to_string(out.value) + " disagree beyond tail and rounding");
    }
    return out;
}

SymmetricMatrix kernel_section(const FracExponent& sigma, std::size_t N, std::size_t first, bool allow_large)
{
    if (N < 1 || first < 1) {
        throw DomainError("kernel_section: need N >= 1 and first >= 1");
    }
    if (N > section_cap && !allow_large) {
        throw DomainError("kernel_section: N = " + std::to_string(N) + " exceeds the default cap of " +
                          std::to_string(section_cap));
    }
    const CoefficientTable table(sigma.value(), 2 * (first + N));
    SymmetricMatrix a(N);
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = i; j < N; ++j) {
            a.set(i, j, table.entry(first + i, first + j));
        }
    }
    return a;
}

SignScan kernel_sign_scan(const FracExponent& sigma, std::size_t N)
{
    if (N < 2) {
        throw DomainError("kernel_sign_scan: N must be at least 2");
    }
    const CoefficientTable table(sigma.value(), 2 * N);
    SignScan scan;
    for (std::size_t m = 1; m <= N; ++m) {
        for (std::size_t n = m + 1; n <= N; ++n) {
            const double k = table.entry(m, n);
            if (k > 0.0) {
                scan.all_offdiag_nonpositive = false;
                if (!scan.witness) {
                    scan.witness = SignWitness{m, n, k};
                }
            }
        }
    }
    return scan;
}

} // namespace kernel
} // namespace hardy
