#pragma once

#include <cstddef>
#include <functional>
#include <optional>

namespace hardy::special {

/// Algebraic behaviour |f(x)| ~ |x - endpoint|^order at a flagged endpoint.
/// The order must exceed -1 (integrable).
struct EndpointSingularity {
    std::optional<double> lower;
    std::optional<double> upper;
};

struct QuadResult {
    double value = 0.0;
    double err_estimate = 0.0;
    std::size_t panels = 0;
    std::size_t evaluations = 0;
};

struct QuadOptions {
    std::size_t max_panels = 200000;
    std::size_t initial_panels = 16;
};

/// Global adaptive composite Gauss-Legendre quadrature of f over [a, b].
///
/// Each panel is integrated with a 20-point rule on the whole panel and on
/// its two halves; the halves' sum is kept and their difference from the
/// whole-panel value is the error estimate. The worst panel is bisected
/// until the summed estimate drops below `tol` (absolute).
///
/// A flagged endpoint gets a panel of width (b-a)/16 mapped through
/// x = endpoint +- w s^k, with k chosen from the declared order so that the
/// mapped integrand vanishes like s^3 or faster; panels then refine
/// dyadically toward the endpoint in s.
///
/// Near a nonzero endpoint the integrand is only resolved down to the
/// spacing of doubles there, so strong singularities belong at x = 0.
///
/// Throws NoConvergence when the panel budget is exhausted first.
QuadResult quad_adaptive(const std::function<double(double)>& f, double a, double b, double tol,
                         const EndpointSingularity& singularity = {}, const QuadOptions& options = {});

} // namespace hardy::special
