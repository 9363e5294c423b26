#pragma once

// The fractional Dirichlet Laplacian on {1, 2, ...} as an explicit kernel
//
//   K_{m,n} = c_{|m-n|} - c_{m+n},   c_k = (-1)^k binom(2 sigma, sigma + k),
//
// split into off-diagonal edge weights plus the potential R_n = sum_m K_{m,n}.
// Indices are 1-based; f(0) = 0 is implicit and never stored.

#include "hardy/linalg.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace hardy {

/// Exponent sigma in (0, 3/2).
class FracExponent {
public:
    explicit FracExponent(double sigma);
    double value() const { return sigma_; }
    /// The kernel is a graph Laplacian plus a nonnegative potential iff sigma <= 1.
    bool graph_representable() const { return sigma_ <= 1.0; }

private:
    double sigma_;
};

/// Finitely supported function on {1, 2, ...}: values on the window
/// [support_start, support_start + values.size()), zero elsewhere.
class LatticeFunction {
public:
    LatticeFunction() = default;
    LatticeFunction(std::size_t support_start, std::vector<double> values);

    /// Indicator of the single site n.
    static LatticeFunction unit(std::size_t n);

    double operator()(std::size_t n) const;
    std::size_t support_start() const { return start_; }
    /// Last index of the stored window (start - 1 when empty).
    std::size_t support_last() const { return start_ + values_.size() - 1; }
    bool empty() const { return values_.empty(); }
    const std::vector<double>& values() const { return values_; }

private:
    std::size_t start_ = 1;
    std::vector<double> values_;
};

/// Inclusive index range [first, last].
struct IndexRange {
    std::size_t first = 1;
    std::size_t last = 1;
};

/// How infinite sums over m are truncated and certified.
struct TruncationPolicy {
    std::size_t n_max = std::size_t{1} << 17;
    double tail_tol = 1e-6;
    /// Summands growing like m^e are rejected unless 2 sigma - e exceeds this.
    double tail_exponent_margin = 1e-3;

    void validate() const;
};

/// Signed enclosure of a neglected tail: truth lies in [value + lower, value + upper].
struct TailInterval {
    double lower = 0.0;
    double upper = 0.0;

    double width() const { return upper - lower; }
    double magnitude() const;
    TailInterval scaled(double factor) const;
    TailInterval& operator+=(const TailInterval& other);
};

struct TailedValue {
    double value = 0.0;
    TailInterval tail;
    std::size_t cutoff = 0; ///< last index summed

    bool brackets(double x, double slack = 0.0) const;
};

/// Calibrated bound for sum_{m > N} K_{m,n} g(m) where |g(m)| grows like m^e.
///
/// Feed the terms K_{m,n} g(m) for m in [N/2, N]; the prefactor is twice the
/// largest |term| / (|m-n|^{-2 sigma - 2} m^e) seen there, matching the
/// n m^{-2 sigma - 2} decay of a fixed kernel row. The bound is
///   c (1 - n/N)^{-2 sigma - 2} N^{e - 2 sigma - 1} / (2 sigma + 1 - e),
/// signed by the observed terms when they all share one sign. With
/// max_samples > 0 only an evenly strided subset of the window (always
/// including m = N) is inspected.
class TailEstimator {
public:
    TailEstimator(double sigma, std::size_t n, std::size_t cutoff, double exponent, std::size_t max_samples = 0);

    bool in_window(std::size_t m) const
    {
        return m >= window_first_ && m <= cutoff_ && m != n_ &&
               ((m - window_first_) % stride_ == 0 || m == cutoff_);
    }
    void observe(std::size_t m, double term);
    TailInterval interval() const;

private:
    double sigma_;
    std::size_t n_;
    std::size_t cutoff_;
    std::size_t window_first_;
    std::size_t stride_ = 1;
    double exponent_;
    double prefactor_ = 0.0;
    bool seen_positive_ = false;
    bool seen_negative_ = false;
};

/// Throws PolicyRejected unless a tail with growth exponent e against a row
/// of the sigma-kernel is summable with the policy's margin, and the cutoff
/// is at least 2n + 2.
void check_tail_admissible(double sigma, double exponent, std::size_t n, std::size_t cutoff,
                           const TruncationPolicy& policy);

namespace kernel {

/// c_k = (-1)^k binom(2 sigma, sigma + k). Even in k.
double coefficient(double sigma, std::size_t k);

/// Table of c_0 .. c_kmax; entry() agrees bitwise with kernel_entry().
class CoefficientTable {
public:
    CoefficientTable(double sigma, std::size_t kmax);
    double c(std::size_t k) const { return c_[k]; }
    double entry(std::size_t m, std::size_t n) const { return c_[m > n ? m - n : n - m] - c_[m + n]; }
    std::size_t kmax() const { return c_.size() - 1; }
    double sigma() const { return sigma_; }

private:
    double sigma_;
    std::vector<double> c_;
};

double kernel_entry(const FracExponent& sigma, std::size_t m, std::size_t n);

/// (2^{sigma+1}/pi) int_0^pi (1 - cos t)^sigma sin(mt) sin(nt) dt by adaptive quadrature.
double kernel_entry_oracle(const FracExponent& sigma, std::size_t m, std::size_t n, double tol);

/// R_n = -2 (-1)^n n Gamma(2 sigma) / (Gamma(1 + sigma - n) Gamma(1 + sigma + n)).
/// The pole convention makes R = delta_1 at sigma = 1.
double potential_term(const FracExponent& sigma, std::size_t n);

/// Truncated row sum sum_{m <= n_max} K_{m,n} with a certified tail.
TailedValue potential_oracle(const FracExponent& sigma, std::size_t n, const TruncationPolicy& policy);

/// (K f)(n) for n in the window; exact finite sums over the support of f.
LatticeFunction apply_operator(const FracExponent& sigma, const LatticeFunction& f, IndexRange window);

/// sum_{m=1}^{N} K_{m,n} g(m) for g tabulated as g[0] = g(1), ..., g[N-1] = g(N),
/// with |g(m)| ~ m^tail_exponent beyond N. The tail interval is not checked
/// against tail_tol.
TailedValue apply_operator_tabulated_unchecked(const CoefficientTable& table, std::span<const double> g,
                                               double tail_exponent, std::size_t n,
                                               const TruncationPolicy& policy);

/// As above, building its own coefficient table; throws PolicyRejected when
/// the tail is not summable or its width exceeds policy.tail_tol.
TailedValue apply_operator_tabulated(const FracExponent& sigma, std::span<const double> g, double tail_exponent,
                                     std::size_t n, const TruncationPolicy& policy);

struct QuadraticForm {
    double value = 0.0;      ///< graph form (returned value)
    double direct = 0.0;     ///< sum_{m,n} f(n) K_{m,n} f(m)
    TailInterval tail;       ///< enclosure of what the truncated graph form misses
    double tolerance = 0.0;  ///< agreement tolerance used between the two paths
    std::size_t cutoff = 0;
};

/// <f, K f> by the direct double sum and by the graph form
/// (1/2) sum sum (-K)(f_m - f_n)^2 + sum R f^2. Throws InternalInconsistency
/// when the two disagree beyond the tail plus rounding tolerance.
QuadraticForm quadratic_form(const FracExponent& sigma, const LatticeFunction& f,
                             const TruncationPolicy& policy = {});

inline constexpr std::size_t section_cap = 8192;

/// K restricted to [first, first + N); entry (i, j) is K_{first+i, first+j}.
/// Throws DomainError for N > section_cap unless allow_large is set.
SymmetricMatrix kernel_section(const FracExponent& sigma, std::size_t N, std::size_t first = 1,
                               bool allow_large = false);

struct SignWitness {
    std::size_t m = 0;
    std::size_t n = 0;
    double value = 0.0;
};

struct SignScan {
    bool all_offdiag_nonpositive = true;
    std::optional<SignWitness> witness; ///< first positive entry in row-major order
};

SignScan kernel_sign_scan(const FracExponent& sigma, std::size_t N);

} // namespace kernel
} // namespace hardy
