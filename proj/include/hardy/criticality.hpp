#pragma once

#include "hardy/kernel.hpp"
#include "hardy/weights.hpp"

#include <cstddef>
#include <functional>
#include <string_view>
#include <vector>

namespace hardy {

enum class EnergyMethod { direct, graph_form, simplified };

std::string_view to_string(EnergyMethod m);

struct EnergyReport {
    double value = 0.0;
    double truncation_tail = 0.0; ///< max |endpoint| of the tail interval
    TailInterval tail;
    EnergyMethod method = EnergyMethod::graph_form;
    std::size_t cutoff = 0;
};

struct EigenEstimate {
    std::size_t window_start = 1;
    std::size_t window_len = 0;
    double lambda_min = 0.0;
    int iterations = 0;
};

namespace criticality {

/// 1 on [1, k], 2 - log n / log k on (k, k^2], 0 beyond. k >= 2.
double null_sequence(std::size_t k, std::size_t n);

/// phi_k as a lattice function on [1, k^2].
LatticeFunction null_sequence_function(std::size_t k);

/// <phi, K phi> - sum W(n) phi(n)^2 with the graph-form quadratic form.
EnergyReport energy_functional(const FracExponent& sigma, const std::function<double(std::size_t)>& weight,
                               const LatticeFunction& phi, const TruncationPolicy& policy = {});

/// (1/2) sum_{m != n} (-K_{m,n}) I_a(n) I_a(m) (phi(n) - phi(m))^2.
/// Pairs with one index past the cutoff M = max(policy.n_max, 64 * last
/// support index) are replaced by a tail interval.
EnergyReport simplified_energy(const WeightSpec& spec, const LatticeFunction& phi,
                               const TruncationPolicy& policy = {});

struct GsrResidual {
    double residual = 0.0;  ///< |Q_W(phi) - Q_a(phi / I_a)|
    double tolerance = 0.0; ///< combined tails + 1e-8
    EnergyReport energy;
    EnergyReport simplified;
    bool pass() const { return residual <= tolerance; }
};

/// Ground-state representation check: Q_W(phi) = Q_a(phi / I_a) with W = W_{a,s}.
GsrResidual gsr_residual(const WeightSpec& spec, const LatticeFunction& phi, const TruncationPolicy& policy = {});

struct NullEnergyPoint {
    std::size_t k = 0;
    EnergyReport energy;
};

/// Q_a(phi_k) for each k in k_list.
std::vector<NullEnergyPoint> null_energy_curve(const WeightSpec& spec, const std::vector<std::size_t>& k_list,
                                               const TruncationPolicy& policy = {});

/// S(N) = sum_{n <= N} I_a(n)^2 W_{a,s}(n) = sum I_a(n) I_{a-s}(n).
double null_criticality_sum(const WeightSpec& spec, std::size_t N);

/// Partial sums S(N_1), S(N_2), ... for increasing N_i in one pass.
std::vector<double> null_criticality_sums(const WeightSpec& spec, const std::vector<std::size_t>& Ns);

/// Smallest eigenvalue of D^{-1/2} K D^{-1/2} on [window_start, window_start + N),
/// D = diag(n^{-2 sigma}); a Rayleigh-quotient upper bound on the Hardy
/// constant (at infinity when window_start > 1).
EigenEstimate hardy_constant_estimate(const FracExponent& sigma, std::size_t N, std::size_t window_start = 1);

} // namespace criticality
} // namespace hardy
