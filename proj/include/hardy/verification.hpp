#pragma once

// Residual checks of the Gamma/binomial identities behind the kernel and the
// Riesz potentials, plus suites that bundle the property checks the CLI
// reports.

#include "hardy/kernel.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hardy {

struct ResidualRecord {
    std::string name;
    std::map<std::string, double> parameters;
    double lhs = 0.0;
    double rhs = 0.0;
    double abs_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

/// Fills abs_residual and pass from lhs, rhs and tolerance.
ResidualRecord make_record(std::string name, std::map<std::string, double> parameters, double lhs, double rhs,
                           double tolerance);

namespace verification {

/// sum_{m=0}^{n-1} (-1)^m C(2s, s+m)
///   = G(2s)/(G(s)G(s+1)) + (-1)^{n-1} G(2s)/(G(s+n)G(s-n+1)).
ResidualRecord lemma_sum1_residual(double sigma, std::size_t n);

/// sum_{m=0}^{n-1} (-1)^{m+1} C(2s, s+m+1)
///   = -G(2s)/(G(s)G(s+1)) + (-1)^n G(2s)/(G(s-n)G(s+n+1)).
ResidualRecord lemma_sum2_residual(double sigma, std::size_t n);

/// sum_{m=-n+1}^{n} (-1)^m C(2s, s+m) = -2 (-1)^n n G(2s)/(G(1+s-n)G(1+s+n)).
ResidualRecord lemma_potential_sum_residual(double sigma, std::size_t n);

/// G(a-n-1)/G(-n-a) - G(a+n-1)/G(n-a) = G(n+a-1)/G(n-a+2) 2n(2a-1).
ResidualRecord lemma_simpriesz_residual(double alpha, std::size_t n);

/// tan(pi b) (1 - (b)_{2m}/(1-b)_{2m}); equals 2 pi m at b = 1.
/// DomainError at b = 1/2 and outside (0, 3/2).
double j_beta(double beta, std::size_t m);

/// 2^{b-2} G(b)^2/G(2b) j_beta(b, m).
double J_beta_closed(double beta, std::size_t m);

/// int_0^pi sin^2(m t) (1 - cos t)^{-b} dt by adaptive quadrature.
double J_beta_oracle(double beta, std::size_t m, double tol);

/// Deterministic uniform doubles in [0, 1) from a 64-bit seed, identical
/// on every platform.
class SeededUniform {
public:
    explicit SeededUniform(std::uint64_t seed);
    double next();
    double next(double lo, double hi) { return lo + (hi - lo) * next(); }

private:
    std::uint64_t state_;
};

/// Random draw in (lo, hi) kept at least `gap` away from every multiple of
/// `lattice` (the places where some Gamma argument of the identities hits a pole).
double draw_off_lattice(SeededUniform& rng, double lo, double hi, double lattice, double gap = 1e-3);

/// 20 pole-avoiding random draws (n <= 40) for each of the four identities.
std::vector<ResidualRecord> appendix_suite(std::uint64_t seed, std::size_t draws = 20, std::size_t n_max = 40);

/// Closed form of J_beta against quadrature for b in {0.25, 0.4, 0.75, 1.1}, m <= m_max,
/// and the log-growth check at b = 1/2.
std::vector<ResidualRecord> j_beta_suite(std::size_t m_max = 30);

/// Off-diagonal sign structure of the kernel sections.
std::vector<ResidualRecord> sign_suite(std::size_t N = 200);

/// (-Delta)^sigma I_a = I_{a - sigma} on the acceptance grid, n <= n_last.
std::vector<ResidualRecord> mellin_suite(std::size_t n_last, const TruncationPolicy& policy);

/// Riesz and weight asymptotics at n = 10^4.
std::vector<ResidualRecord> asymptotics_suite();

} // namespace verification
} // namespace hardy
