#pragma once

// Scalar special functions behind every closed form in the library.
//
// All routines work in double precision with long double intermediates.
// Poles of Gamma follow one convention throughout: 1/Gamma(k) = 0 for
// k = 0, -1, -2, ...

#include <cstdint>

namespace hardy::special {

/// log|Gamma(x)| together with the sign of Gamma(x).
struct SignedLogGamma {
    double log_abs = 0.0;
    int sign = 1; ///< +1, -1, or 0 at a pole
};

/// True when x is 0, -1, -2, ...
bool is_nonpositive_integer(double x);

/// sin(pi x) with exact argument reduction; exactly 0 at integers.
double sin_pi(double x);

/// cos(pi x) with exact argument reduction; exactly 0 at half-integers.
double cos_pi(double x);

SignedLogGamma log_gamma(double x);

/// Gamma(x); +-inf on overflow, NaN at poles.
double gamma(double x);

/// 1/Gamma(x), exactly 0 at the poles of Gamma.
double inv_gamma(double x);

/// Gamma(a)/Gamma(b). Returns 0 when b is a pole.
/// Throws NumeratorPole when a is a pole. Accurate for large arguments:
/// when both are large the log difference is formed without cancellation.
double gamma_ratio(double a, double b);

/// Gamma(a+1) / (Gamma(b+1) Gamma(a-b+1)) for real a, b.
/// Throws IndeterminatePole when a numerator pole meets a denominator pole,
/// NumeratorPole when only the numerator is singular.
double binomial_real(double a, double b);

/// (beta)_k = beta (beta+1) ... (beta+k-1); empty product is 1.
double pochhammer(double beta, std::uint64_t k);

/// Chebyshev polynomial of the second kind U_n(x), |x| <= 1.
double chebyshev_u(std::uint64_t n, double x);

/// Digamma psi(x). Throws PoleError at nonpositive integers.
double digamma(double x);

/// Euler-Mascheroni constant.
inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;

} // namespace hardy::special
