#include "hardy/criticality.hpp"

#include "hardy/errors.hpp"
#include "hardy/linalg.hpp"
#include "hardy/riesz.hpp"
#include "hardy/summation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hardy {

std::string_view to_string(EnergyMethod m)
{
    switch (m) {
    case EnergyMethod::direct:
        return "direct";
    case EnergyMethod::graph_form:
        return "graph_form";
    case EnergyMethod::simplified:
        return "simplified";
    }
    return "unknown";
}

namespace criticality {

namespace {

// Tail calibration per row inspects at most this many window points.
constexpr std::size_t tail_samples = 2048;

constexpr std::size_t cutoff_multiplier = 64;

} // namespace

double null_sequence(std::size_t k, std::size_t n)
{
    if (k < 2) {
        throw DomainError("null_sequence: k must be at least 2");
    }
    if (n < 1) {
        throw DomainError("null_sequence: n starts at 1");
    }
    if (n <= k) {
        return 1.0;
    }
    if (n <= k * k) {
        return 2.0 - std::log(static_cast<double>(n)) / std::log(static_cast<double>(k));
    }
    return 0.0;
}

LatticeFunction null_sequence_function(std::size_t k)
{
    if (k < 2) {
        throw DomainError("null_sequence: k must be at least 2");
    }
    std::vector<double> values(k * k);
    for (std::size_t n = 1; n <= k * k; ++n) {
        values[n - 1] = null_sequence(k, n);
    }
    return LatticeFunction(1, std::move(values));
}

EnergyReport energy_functional(const FracExponent& sigma, const std::function<double(std::size_t)>& weight,
                               const LatticeFunction& phi, const TruncationPolicy& policy)
{
    const auto q = kernel::quadratic_form(sigma, phi, policy);
    CompensatedSum potential;
    if (!phi.empty()) {
        for (std::size_t n = phi.support_start(); n <= phi.support_last(); ++n) {
            const double v = phi(n);
            if (v != 0.0) {
                potential.add(weight(n) * v * v);
            }
        }
    }
    EnergyReport r;
    r.value = q.value - potential.value();
    r.tail = q.tail;
    r.truncation_tail = q.tail.magnitude();
    r.method = EnergyMethod::graph_form;
    r.cutoff = q.cutoff;
    return r;
}

EnergyReport simplified_energy(const WeightSpec& spec, const LatticeFunction& phi, const TruncationPolicy& policy)
{
    policy.validate();
    EnergyReport r;
    r.method = EnergyMethod::simplified;
    if (phi.empty()) {
        return r;
    }
    const double s = spec.sigma();
    const double e = 2.0 * spec.alpha() - 2.0;
    const std::size_t first = phi.support_start();
    const std::size_t last = phi.support_last();
    const std::size_t M = std::max({policy.n_max, cutoff_multiplier * last, 2 * last + 2});
    check_tail_admissible(s, e, last, M, policy);

    const auto I = riesz::tabulate(RieszIndex(spec.alpha()), M);
    const kernel::CoefficientTable table(s, M + last);

    CompensatedSum total;
    for (std::size_t n = first; n <= last; ++n) {
        for (std::size_t m = n + 1; m <= last; ++m) {
            const double d = phi(n) - phi(m);
            if (d != 0.0) {
                total.add(-table.entry(m, n) * I[n - 1] * I[m - 1] * d * d);
            }
        }
    }
    TailInterval tail;
    for (std::size_t n = first; n <= last; ++n) {
        const double v = phi(n);
        if (v == 0.0) {
            continue;
        }
        const double scale = v * v * I[n - 1];
        CompensatedSum row;
        for (std::size_t m = 1; m < first; ++m) {
            row.add(-table.entry(m, n) * I[m - 1]);
        }
        TailEstimator est(s, n, M, e, tail_samples);
        for (std::size_t m = last + 1; m <= M; ++m) {
            const double term = -table.entry(m, n) * I[m - 1];
            row.add(term);
            if (est.in_window(m)) {
                est.observe(m, term);
            }
        }
        total.add(scale * row.value());
        tail += est.interval().scaled(scale);
    }
    if (tail.width() > policy.tail_tol) {
        throw PolicyRejected("simplified_energy: tail width " + std::to_string(tail.width()) +
                             " exceeds tail_tol with cutoff " + std::to_string(M));
    }
    r.value = total.value();
    r.tail = tail;
    r.truncation_tail = tail.magnitude();
    r.cutoff = M;
    return r;
}

GsrResidual gsr_residual(const WeightSpec& spec, const LatticeFunction& phi, const TruncationPolicy& policy)
{
    GsrResidual out;
    const FracExponent sigma(spec.sigma());
    out.energy = energy_functional(
        sigma, [&spec](std::size_t n) { return weights::hardy_weight(spec, n); }, phi, policy);
    std::vector<double> ground(phi.values().size());
    if (!phi.empty()) {
        const RieszIndex alpha(spec.alpha());
        for (std::size_t n = phi.support_start(); n <= phi.support_last(); ++n) {
            ground[n - phi.support_start()] = phi(n) / riesz::riesz_potential(alpha, n);
        }
    }
    out.simplified = simplified_energy(spec, LatticeFunction(phi.support_start(), std::move(ground)), policy);
    out.residual = std::fabs(out.energy.value - out.simplified.value);
    out.tolerance = out.energy.truncation_tail + out.simplified.truncation_tail + 1e-8;
    return out;
}

std::vector<NullEnergyPoint> null_energy_curve(const WeightSpec& spec, const std::vector<std::size_t>& k_list,
                                               const TruncationPolicy& policy)
{
    std::vector<NullEnergyPoint> out;
    out.reserve(k_list.size());
    for (std::size_t k : k_list) {
        out.push_back({k, simplified_energy(spec, null_sequence_function(k), policy)});
    }
    return out;
}

std::vector<double> null_criticality_sums(const WeightSpec& spec, const std::vector<std::size_t>& Ns)
{
    if (!std::is_sorted(Ns.begin(), Ns.end())) {
        throw DomainError("null_criticality_sums: N values must be nondecreasing");
    }
    std::vector<double> out;
    if (Ns.empty()) {
        return out;
    }
    const auto Ia = riesz::tabulate(RieszIndex(spec.alpha()), Ns.back());
    const auto Ib = riesz::tabulate(RieszIndex(spec.alpha() - spec.sigma()), Ns.back());
    CompensatedSum sum;
    std::size_t next = 0;
    for (std::size_t n = 1; n <= Ns.back() && next < Ns.size(); ++n) {
        sum.add(Ia[n - 1] * Ib[n - 1]);
        while (next < Ns.size() && Ns[next] == n) {
            out.push_back(sum.value());
            ++next;
        }
    }
    while (out.size() < Ns.size()) {
        out.push_back(0.0); // only N = 0 entries remain
    }
    return out;
}

double null_criticality_sum(const WeightSpec& spec, std::size_t N)
{
    return null_criticality_sums(spec, {N}).front();
}

EigenEstimate hardy_constant_estimate(const FracExponent& sigma, std::size_t N, std::size_t window_start)
{
    if (!sigma.graph_representable()) {
        throw DomainError("hardy_constant_estimate: sigma must lie in (0, 1]");
    }
    if (N < 2 || window_start < 1) {
        throw DomainError("hardy_constant_estimate: need N >= 2 and window_start >= 1");
    }
    const double s = sigma.value();
    const auto k = kernel::kernel_section(sigma, N, window_start);
    std::vector<double> w(N);
    for (std::size_t i = 0; i < N; ++i) {
        w[i] = std::pow(static_cast<double>(window_start + i), s);
    }
    SymmetricMatrix a(N);
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = i; j < N; ++j) {
            a.set(i, j, k(i, j) * w[i] * w[j]);
        }
    }
    const auto eig = symmetric_eigen_min(a);
    return {window_start, N, eig.value, eig.iterations};
}

} // namespace criticality
} // namespace hardy
