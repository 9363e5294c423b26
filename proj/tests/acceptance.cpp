// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "hardy/cli.hpp"
#include "hardy/criticality.hpp"
#include "hardy/errors.hpp"
#include "hardy/kernel.hpp"
#include "hardy/linalg.hpp"
#include "hardy/riesz.hpp"
#include "hardy/verification.hpp"
#include "hardy/weights.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using namespace hardy;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Reporter {
    int failures = 0;

    void run(int id, const char* title, const std::function<Outcome()>& check)
    {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (!o.pass) {
            ++failures;
        }
        std::printf("%s [%2d] %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str(), secs);
        std::fflush(stdout);
    }
};

std::string fmt(const char* f, auto... args)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool all_pass(const std::vector<ResidualRecord>& rs)
{
    return std::all_of(rs.begin(), rs.end(), [](const ResidualRecord& r) { return r.pass; });
}

// Smallest eigenvalue of a symmetric 3x3 matrix from the cubic characteristic polynomial.
double cubic_min_eigenvalue(const std::array<std::array<double, 3>, 3>& a)
{
    const double p1 = a[0][1] * a[0][1] + a[0][2] * a[0][2] + a[1][2] * a[1][2];
    const double q = (a[0][0] + a[1][1] + a[2][2]) / 3.0;
    const double p2 = (a[0][0] - q) * (a[0][0] - q) + (a[1][1] - q) * (a[1][1] - q) +
                      (a[2][2] - q) * (a[2][2] - q) + 2.0 * p1;
    const double p = std::sqrt(p2 / 6.0);
    if (p == 0.0) {
        return q;
    }
    std::array<std::array<double, 3>, 3> b{};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            b[i][j] = (a[i][j] - (i == j ? q : 0.0)) / p;
        }
    }
    const double det = b[0][0] * (b[1][1] * b[2][2] - b[1][2] * b[2][1]) -
                       b[0][1] * (b[1][0] * b[2][2] - b[1][2] * b[2][0]) +
                       b[0][2] * (b[1][0] * b[2][1] - b[1][1] * b[2][0]);
    const double phi = std::acos(std::clamp(det / 2.0, -1.0, 1.0)) / 3.0;
    return q + 2.0 * p * std::cos(phi + 2.0 * std::numbers::pi / 3.0);
}

Outcome kernel_vs_quadrature()
{
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (double s : {0.3, 0.5, 0.75, 1.0}) {
        const FracExponent sigma(s);
        for (std::size_t m = 1; m <= 40; ++m) {
            for (std::size_t n = 1; n <= 40; ++n) {
                const double d = std::fabs(kernel::kernel_entry(sigma, m, n) -
                                           kernel::kernel_entry_oracle(sigma, m, n, 1e-10));
                worst = std::max(worst, d);
            }
        }
    }
    const double secs = seconds_since(t0);
    return {worst <= 1e-8 && secs <= 60.0, fmt("max|diff| = %.3g (<= 1e-8), runtime %.1f s (<= 60 s)", worst, secs)};
}

Outcome sigma_one_degenerations()
{
    const FracExponent one(1.0);
    const auto a = kernel::kernel_section(one, 200);
    double worst_k = 0.0;
    for (std::size_t i = 0; i < 200; ++i) {
        for (std::size_t j = 0; j < 200; ++j) {
            const double want = i == j ? 2.0 : (i + 1 == j || j + 1 == i) ? -1.0 : 0.0;
            worst_k = std::max(worst_k, std::fabs(a(i, j) - want));
        }
    }
    double worst_r = 0.0;
    for (std::size_t n = 1; n <= 50; ++n) {
        worst_r = std::max(worst_r, std::fabs(kernel::potential_term(one, n) - (n == 1 ? 1.0 : 0.0)));
    }
    return {worst_k <= 1e-12 && worst_r <= 1e-12,
            fmt("section vs tridiag(-1,2,-1) %.3g, R vs delta_1 %.3g (<= 1e-12)", worst_k, worst_r)};
}

Outcome riesz_checks()
{
    double worst_q = 0.0;
    for (double a : {0.4, 0.75, 1.0, 1.25}) {
        const RieszIndex alpha(a);
        for (std::size_t n = 1; n <= 40; ++n) {
            worst_q = std::max(worst_q, std::fabs(riesz::riesz_potential(alpha, n) -
                                                  riesz::riesz_oracle(alpha, n, 1e-10)));
        }
    }
    const double c = std::sqrt(std::numbers::pi / 2.0);
    double worst_i1 = 0.0;
    double worst_g1 = 0.0;
    for (std::size_t n = 1; n <= 1000; ++n) {
        worst_i1 = std::max(worst_i1, std::fabs(riesz::riesz_potential(RieszIndex(1.0), n) - c));
        worst_g1 = std::max(worst_g1, std::fabs(riesz::green_function(FracExponent(1.0), n) - 1.0));
    }
    return {worst_q <= 1e-8 && worst_i1 <= 1e-12 && worst_g1 <= 1e-12,
            fmt("closed vs quadrature %.3g (<= 1e-8); I_1 - sqrt(pi/2) %.3g, G_1 - 1 %.3g (<= 1e-12, n <= 1000)",
                worst_q, worst_i1, worst_g1)};
}

Outcome mellin()
{
    const auto t0 = std::chrono::steady_clock::now();
    TruncationPolicy p;
    p.n_max = 1000000;
    const auto rs = verification::mellin_suite(20, p);
    double worst_rel = 0.0;
    std::size_t largest_cutoff = 0;
    for (const auto& r : rs) {
        worst_rel = std::max(worst_rel, r.abs_residual / std::fabs(r.rhs));
        largest_cutoff = std::max(largest_cutoff, static_cast<std::size_t>(r.parameters.at("n_max")));
    }
    const double secs = seconds_since(t0);
    return {all_pass(rs) && largest_cutoff <= 1000000 && secs <= 300.0,
            fmt("%zu sites, worst relative residual %.3g (<= 1e-3 or within tail), largest cutoff %zu, runtime %.1f s "
                "(<= 300 s)",
                rs.size(), worst_rel, largest_cutoff, secs)};
}

Outcome ground_state_representation()
{
    const std::pair<double, double> specs[] = {{1.0, 1.25}, {0.5, 1.0}, {0.75, 1.1}};
    std::size_t failed = 0;
    double worst = 0.0;
    double worst_ratio = 0.0;
    for (const auto& [s, a] : specs) {
        const WeightSpec spec(s, a);
        verification::SeededUniform rng(7);
        for (int t = 0; t < 100; ++t) {
            const std::size_t start = 1 + static_cast<std::size_t>(rng.next() * 10.0);
            const std::size_t len = 1 + static_cast<std::size_t>(rng.next() * 30.0);
            std::vector<double> v(len);
            for (double& x : v) {
                x = rng.next(-1.0, 1.0);
            }
            const auto r = criticality::gsr_residual(spec, LatticeFunction(start, std::move(v)));
            failed += r.pass() ? 0 : 1;
            worst = std::max(worst, r.residual);
            worst_ratio = std::max(worst_ratio, r.residual / r.tolerance);
        }
    }
    return {failed == 0, fmt("300 random trials, %zu over tolerance; worst residual %.3g, worst residual/tolerance %.3g",
                             failed, worst, worst_ratio)};
}

Outcome two_path_weights()
{
    double worst_rel = 0.0;
    for (const auto& spec : weights::admissible_grid()) {
        const RieszIndex a(spec.alpha());
        const RieszIndex b(spec.alpha() - spec.sigma());
        for (std::size_t n = 1; n <= 100; ++n) {
            const double ratio = riesz::riesz_potential(b, n) / riesz::riesz_potential(a, n);
            worst_rel = std::max(worst_rel, std::fabs(weights::hardy_weight_closed_form(spec, n) - ratio) / ratio);
        }
    }
    double worst_op = 0.0;
    for (std::size_t n = 1; n <= 1000; ++n) {
        const double dn = static_cast<double>(n);
        worst_op = std::max(worst_op, std::fabs(weights::optimal_weight(1.0, n) - 0.25 / (dn * dn - 9.0 / 16.0)));
    }
    return {worst_rel <= 1e-10 && worst_op <= 1e-13,
            fmt("closed form vs I-ratio %.3g relative (<= 1e-10); W_1^op vs 0.25/(n^2-9/16) %.3g (<= 1e-13)",
                worst_rel, worst_op)};
}

Outcome weight_asymptotics()
{
    double lo = 1e300;
    double hi = -1e300;
    for (const auto& spec : weights::admissible_grid()) {
        const double r = weights::hardy_weight(spec, 10000) * std::pow(1e4, 2.0 * spec.sigma()) /
                         weights::psi_constant(spec.sigma(), spec.alpha());
        lo = std::min(lo, r);
        hi = std::max(hi, r);
    }
    bool decreasing = true;
    for (double s : {0.25, 0.5, 0.75, 1.0}) {
        const double a0 = 0.75 + 0.5 * s;
        double prev = 0.0;
        for (int i = 1; i <= 50; ++i) {
            const double a = a0 + (1.5 - a0) * i / 51.0;
            const double v = weights::psi_constant(s, a);
            if (i > 1 && !(v < prev)) {
                decreasing = false;
            }
            prev = v;
        }
    }
    double worst_c = 0.0;
    for (double s : {0.1, 0.25, 0.5, 0.75, 1.0}) {
        worst_c = std::max(worst_c, std::fabs(weights::psi_constant(s, 0.75 + 0.5 * s) - weights::critical_constant(s)));
    }
    const double c1 = std::fabs(weights::critical_constant(1.0) - 0.25);
    const double ch = std::fabs(weights::critical_constant(0.5) - 2.0 / std::numbers::pi);
    const bool ok = lo >= 0.98 && hi <= 1.02 && decreasing && worst_c <= 1e-12 && c1 <= 1e-12 && ch <= 1e-12;
    return {ok, fmt("ratio range [%.6f, %.6f] (in [0.98, 1.02]); Psi decreasing: %s; |Psi(a*) - C| %.3g, |C_1 - 1/4| "
                    "%.3g, |C_1/2 - 2/pi| %.3g (<= 1e-12)",
                    lo, hi, decreasing ? "yes" : "no", worst_c, c1, ch)};
}

Outcome null_criticality()
{
    const std::vector<std::size_t> Ns{1000, 2000, 10000, 20000, 100000, 200000};
    bool ok = true;
    std::ostringstream msg;
    for (double s : {0.5, 1.0}) {
        const WeightSpec crit(s, 0.75 + 0.5 * s);
        const auto S = criticality::null_criticality_sums(crit, Ns);
        const double inc[3] = {S[1] - S[0], S[3] - S[2], S[5] - S[4]};
        const double lo = std::min({inc[0], inc[1], inc[2]});
        const double hi = std::max({inc[0], inc[1], inc[2]});
        const bool stable = lo > 0.0 && hi / lo <= 1.1;
        ok = ok && stable;
        msg << fmt("sigma=%.2g critical increments %.5f %.5f %.5f; ", s, inc[0], inc[1], inc[2]);

        const WeightSpec sub(s, 0.75 + 0.5 * s - 0.1);
        const auto T = criticality::null_criticality_sums(sub, Ns);
        const double d[3] = {T[1] - T[0], T[3] - T[2], T[5] - T[4]};
        const double expected = 4.0 * sub.alpha() - 3.0 - 2.0 * s;
        for (int i = 0; i < 2; ++i) {
            const double measured = std::log10(d[i + 1] / d[i]);
            const bool close = d[i + 1] < d[i] && std::fabs(measured / expected - 1.0) <= 0.15;
            ok = ok && close;
            msg << fmt("decay exponent %.4f vs %.4f; ", measured, expected);
        }
    }
    return {ok, msg.str()};
}

Outcome null_sequence_energies()
{
    TruncationPolicy p;
    p.tail_tol = 1e-4;
    bool ok = true;
    std::ostringstream msg;
    for (double s : {0.5, 1.0}) {
        const WeightSpec spec(s, 0.75 + 0.5 * s);
        const auto curve = criticality::null_energy_curve(spec, {8, 16, 32, 64}, p);
        const double base = curve[0].energy.value * std::log(8.0);
        msg << fmt("sigma=%.2g Q:", s);
        for (std::size_t i = 0; i < curve.size(); ++i) {
            const auto& e = curve[i].energy;
            msg << fmt(" %.6f", e.value);
            if (i > 0) {
                const auto& prev = curve[i - 1].energy;
                ok = ok && e.value + e.tail.upper < prev.value + prev.tail.lower;
            }
            ok = ok && e.value * std::log(static_cast<double>(curve[i].k)) <= 2.0 * base;
        }
        msg << fmt(", Q log k at k=64 / k=8 = %.4f; ",
                   curve.back().energy.value * std::log(64.0) / base);
    }
    return {ok, msg.str()};
}

Outcome kpp()
{
    const auto cmp = weights::weight_comparison(10000);
    const double d1 = cmp.rows.front().kpp - cmp.rows.front().op1;
    bool above = true;
    for (const auto& r : cmp.rows) {
        if (r.n >= 2 && !(r.op1 > r.kpp)) {
            above = false;
        }
    }
    return {std::fabs(d1 - 0.0143578) <= 1e-6 && above,
            fmt("W_KPP(1) - W_1^op(1) = %.9f (0.0143578 +- 1e-6); W_1^op > W_KPP on 2..10^4: %s", d1,
                above ? "yes" : "no")};
}

Outcome hardy_constant()
{
    const auto t0 = std::chrono::steady_clock::now();
    std::ostringstream msg;

    double worst_oracle = 0.0;
    verification::SeededUniform rng(3);
    for (int t = 0; t < 100; ++t) {
        std::array<std::array<double, 3>, 3> a{};
        SymmetricMatrix m(3);
        for (int i = 0; i < 3; ++i) {
            for (int j = i; j < 3; ++j) {
                a[i][j] = a[j][i] = rng.next(-3.0, 3.0);
                m.set(i, j, a[i][j]);
            }
        }
        worst_oracle = std::max(worst_oracle, std::fabs(symmetric_eigen_min(m).value - cubic_min_eigenvalue(a)));
    }
    const bool oracle_ok = worst_oracle <= 1e-10;
    msg << fmt("3x3 oracle %.3g (<= 1e-10); ", worst_oracle);

    bool one_ok = true;
    double prev = 1e300;
    msg << "sigma=1 N=256,1024,4096:";
    for (std::size_t N : {256u, 1024u, 4096u}) {
        const double v = criticality::hardy_constant_estimate(FracExponent(1.0), N, 1).lambda_min;
        one_ok = one_ok && v <= prev && v >= 0.25 - 1e-9;
        prev = v;
        msg << fmt(" %.6f", v);
    }
    msg << (one_ok ? " (nonincreasing, >= 1/4); " : " (NOT nonincreasing or below 1/4); ");

    bool half_ok = true;
    prev = 1e300;
    double last = 0.0;
    msg << "sigma=0.5 N=2048 windows 64,256,1024:";
    for (std::size_t w : {64u, 256u, 1024u}) {
        last = criticality::hardy_constant_estimate(FracExponent(0.5), 2048, w).lambda_min;
        half_ok = half_ok && last <= prev;
        prev = last;
        msg << fmt(" %.6f", last);
    }
    const double target = 2.0 / std::numbers::pi;
    const bool near = std::fabs(last / target - 1.0) <= 0.1;
    msg << fmt(" (nonincreasing: %s; last/C_1/2 = %.4f, needs within 10%%)", half_ok ? "yes" : "no", last / target);
    const double secs = seconds_since(t0);
    msg << fmt("; runtime %.1f s (<= 600 s)", secs);
    return {oracle_ok && one_ok && half_ok && near && secs <= 600.0, msg.str()};
}

Outcome appendix()
{
    const auto a = verification::appendix_suite(7, 20, 40);
    const auto j = verification::j_beta_suite(30);
    const auto failed_a = std::count_if(a.begin(), a.end(), [](const ResidualRecord& r) { return !r.pass; });
    const auto failed_j = std::count_if(j.begin(), j.end(), [](const ResidualRecord& r) { return !r.pass; });
    return {failed_a == 0 && failed_j == 0,
            fmt("%zu identity residuals (%td failed), %zu J_beta records incl. the beta=1/2 log-growth check "
                "(%td failed)",
                a.size(), failed_a, j.size(), failed_j)};
}

Outcome sign_structure()
{
    bool ok = true;
    for (double s : {0.25, 0.5, 1.0}) {
        ok = ok && kernel::kernel_sign_scan(FracExponent(s), 200).all_offdiag_nonpositive;
    }
    const FracExponent above(1.25);
    const auto scan = kernel::kernel_sign_scan(above, 200);
    std::size_t adjacent_positive = 0;
    std::size_t positive = 0;
    std::size_t min_gap = 0;
    for (std::size_t m = 1; m <= 200; ++m) {
        for (std::size_t n = m + 1; n <= 200; ++n) {
            if (kernel::kernel_entry(above, m, n) > 0.0) {
                ++positive;
                adjacent_positive += (n - m == 1) ? 1 : 0;
                min_gap = min_gap == 0 ? n - m : std::min(min_gap, n - m);
            }
        }
    }
    const bool witness_adjacent = !scan.all_offdiag_nonpositive && adjacent_positive > 0;
    return {ok && witness_adjacent,
            fmt("sigma in {0.25,0.5,1}: nonpositive %s; sigma=1.25: %zu positive off-diagonal entries, %zu of them "
                "adjacent, smallest |m-n| = %zu, first witness (%zu,%zu)",
                ok ? "yes" : "no", positive, adjacent_positive, min_gap, scan.witness ? scan.witness->m : 0,
                scan.witness ? scan.witness->n : 0)};
}

Outcome cli_determinism()
{
    const std::vector<std::vector<std::string>> runs{
        {"kernel", "--sigma", "0.5", "--n", "10"},
        {"potential", "--sigma", "0.5", "--n-max", "5"},
        {"riesz", "--alpha", "0.75", "--n-max", "10"},
        {"green", "--sigma", "0.5", "--n-max", "10"},
        {"weights", "--sigma", "1", "--n-max", "5"},
        {"compare-kpp", "--n-max", "100"},
        {"gsr-check", "--sigma", "0.5", "--n", "10", "--seed", "7"},
        {"null-sequence", "--sigma", "1", "--n-max", "16"},
        {"null-critical", "--sigma", "0.5", "--n-max", "10000"},
        {"hardy-constant", "--sigma", "0.5", "--n", "64", "--window-start", "8"},
        {"verify", "appendix", "--seed", "7"},
        {"verify", "signs"},
        {"verify", "mellin", "--n", "3"},
        {"verify", "asymptotics"},
        {"weights", "--sigma", "0.5", "--format", "json"},
    };
    std::size_t identical = 0;
    std::vector<std::string> broken;
    for (const auto& args : runs) {
        std::string outputs[2];
        int codes[2];
        for (int k = 0; k < 2; ++k) {
            std::vector<const char*> argv{"hardy_cli"};
            for (const auto& a : args) {
                argv.push_back(a.c_str());
            }
            std::ostringstream out;
            std::ostringstream err;
            codes[k] = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
            outputs[k] = out.str();
        }
        if (outputs[0] == outputs[1] && codes[0] == codes[1] && !outputs[0].empty()) {
            ++identical;
        } else {
            broken.push_back(args.front());
        }
    }
    std::string detail = fmt("%zu of %zu invocations byte-identical across two runs", identical, runs.size());
    for (const auto& b : broken) {
        detail += "; differs: " + b;
    }
    return {identical == runs.size(), detail};
}

} // namespace

int main()
{
    Reporter r;
    r.run(1, "kernel closed form vs quadrature", kernel_vs_quadrature);
    r.run(2, "sigma = 1 degenerations", sigma_one_degenerations);
    r.run(3, "Riesz potentials", riesz_checks);
    r.run(4, "Riesz identity (-Delta)^s I_a = I_{a-s}", mellin);
    r.run(5, "ground-state representation", ground_state_representation);
    r.run(6, "two-path weight agreement", two_path_weights);
    r.run(7, "weight asymptotics and Psi", weight_asymptotics);
    r.run(8, "null-criticality dichotomy", null_criticality);
    r.run(9, "null-sequence energies", null_sequence_energies);
    r.run(10, "KPP comparison", kpp);
    r.run(11, "Hardy-constant estimation", hardy_constant);
    r.run(12, "binomial identities and J_beta", appendix);
    r.run(13, "kernel sign structure", sign_structure);
    r.run(14, "CLI determinism", cli_determinism);
    std::printf("%d of 14 criteria failed\n", r.failures);
    return r.failures == 0 ? 0 : 1;
}
