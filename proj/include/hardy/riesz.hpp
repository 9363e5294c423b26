#pragma once

// Riesz potentials on the half-line lattice:
//
//   I_a(n) = 4n / (4^a sqrt 2) * Gamma(3/2 - a)/Gamma(a) * Gamma(n + a - 1)/Gamma(n - a + 2),
//
// the positive solution of (-Delta)^sigma I_a = I_{a - sigma}.

#include "hardy/kernel.hpp"

#include <cstddef>
#include <vector>

namespace hardy {

/// Riesz index alpha in (0, 3/2).
class RieszIndex {
public:
    explicit RieszIndex(double alpha);
    double value() const { return alpha_; }

private:
    double alpha_;
};

namespace riesz {

double riesz_potential(const RieszIndex& alpha, std::size_t n);

/// I_a(1), ..., I_a(N).
std::vector<double> tabulate(const RieszIndex& alpha, std::size_t N);

/// sqrt(2/pi) int_0^pi sin(nt) sin(t) (2 (1 - cos t))^{-a} dt by adaptive quadrature.
double riesz_oracle(const RieszIndex& alpha, std::size_t n, double tol);

/// The same integral with 1 - cos t replaced by 1 + eps - cos t.
double riesz_regularized(const RieszIndex& alpha, double epsilon, std::size_t n, double tol);

/// G_sigma(n) = sqrt(2/pi) I_sigma(n); DomainError for sigma > 1.
double green_function(const FracExponent& sigma, std::size_t n);

/// 2 sqrt 2 4^{-a} Gamma(3/2 - a)/Gamma(a): I_a(n) ~ const n^{2a - 2}.
double riesz_asymptotic_constant(const RieszIndex& alpha);

struct MellinResidual {
    double residual = 0.0; ///< (K I_a)(n) truncated minus I_{a - sigma}(n)
    double lhs = 0.0;      ///< truncated sum
    double rhs = 0.0;      ///< I_{a - sigma}(n)
    TailInterval tail;
    std::size_t n_max = 0; ///< cutoff actually used

    /// |residual| within max(rel * |rhs|, tail) or inside the tail interval.
    bool covered(double rel) const;
};

/// Checks (-Delta)^sigma I_a = I_{a - sigma} at site n with I_a tabulated in
/// closed form. The cutoff grows by factors of 4 from min(4096, n_max) up to
/// policy.n_max until the tail width is below policy.tail_tol; PolicyRejected
/// if it never is.
MellinResidual mellin_identity_residual(const FracExponent& sigma, const RieszIndex& alpha, std::size_t n,
                                        const TruncationPolicy& policy);

/// Batch form for sites 1..n_last sharing one coefficient table per cutoff.
std::vector<MellinResidual> mellin_identity_residuals(const FracExponent& sigma, const RieszIndex& alpha,
                                                      std::size_t n_last, const TruncationPolicy& policy);

} // namespace riesz
} // namespace hardy
