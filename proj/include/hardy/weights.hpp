#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace hardy {

/// Parameters of the weight W_{a,s} = I_{a-s} / I_a:
/// s in (0, 1] and s < a < min(1 + s, 3/2).
class WeightSpec {
public:
    WeightSpec(double sigma, double alpha);
    double sigma() const { return sigma_; }
    double alpha() const { return alpha_; }
    /// (3 + 2 sigma) / 4
    double critical_alpha() const { return 0.75 + 0.5 * sigma_; }

private:
    double sigma_;
    double alpha_;
};

struct WeightClassification {
    bool is_hardy = false;
    bool is_critical = false; ///< alpha <= (3 + 2 sigma)/4
    bool is_optimal = false;  ///< alpha == (3 + 2 sigma)/4 (to 1e-12)
};

namespace weights {

WeightClassification classify(const WeightSpec& spec);

/// Psi_sigma(alpha) times the Gamma-ratio n-dependence; the closed-form path.
double hardy_weight_closed_form(const WeightSpec& spec, std::size_t n);

/// I_{a-s}(n) / I_a(n), cross-checked against the closed form; throws
/// InternalInconsistency if they differ by more than 1e-10 relative.
double hardy_weight(const WeightSpec& spec, std::size_t n);

/// hardy_weight at alpha = (3 + 2 sigma)/4.
double optimal_weight(double sigma, std::size_t n);

/// 2 - sqrt(1 + 1/n) - sqrt(1 - 1/n), evaluated without cancellation.
double kpp_weight(std::size_t n);

/// 4^s Gamma(3/2 - a + s) Gamma(a) / (Gamma(a - s) Gamma(3/2 - a)) for a in (s, 3/2).
double psi_constant(double sigma, double alpha);

/// psi(a) - psi(a - s) - psi(3/2 - a + s) + psi(3/2 - a): the sign of d/da log Psi.
double psi_log_derivative(double sigma, double alpha);

/// C_s = 4^s Gamma((3 + 2s)/4)^2 / Gamma((3 - 2s)/4)^2.
double critical_constant(double sigma);

struct ComparisonRow {
    std::size_t n = 0;
    double kpp = 0.0;
    double op1 = 0.0;
    double diff = 0.0; ///< op1 - kpp
};

struct WeightComparison {
    std::vector<ComparisonRow> rows;
    std::optional<std::size_t> first_crossing; ///< first n with op1 > kpp
    bool kpp_above_at_one = false;              ///< W^KPP(1) > W_1^op(1)
    bool op_above_after_crossing = false;       ///< op1 > kpp for every n from the crossing to n_max
};

WeightComparison weight_comparison(std::size_t n_max);

/// 5 x 5 grid: sigma in {0.2, 0.4, 0.6, 0.8, 1.0}, alpha at 1/6, ..., 5/6 of
/// the way across (sigma, min(1 + sigma, 3/2)).
std::vector<WeightSpec> admissible_grid();

} // namespace weights
} // namespace hardy
