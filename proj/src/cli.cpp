#include "hardy/cli.hpp"

#include "hardy/criticality.hpp"
#include "hardy/errors.hpp"
#include "hardy/kernel.hpp"
#include "hardy/report.hpp"
#include "hardy/riesz.hpp"
#include "hardy/verification.hpp"
#include "hardy/weights.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace hardy::cli {

namespace {

using report::Table;
using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Output {
    Table table;
    json extra = json::object();
    bool pass = true;
    std::vector<ResidualRecord> records; ///< set for verify commands
    bool is_records = false;
};

std::int64_t as_int(std::size_t v)
{
    return static_cast<std::int64_t>(v);
}

double require_alpha(const RunConfig& c)
{
    if (!c.alpha) {
        throw UsageError("--alpha is required for '" + c.command + "'");
    }
    return *c.alpha;
}

double alpha_or_critical(const RunConfig& c)
{
    return c.alpha.value_or(0.75 + 0.5 * c.sigma);
}

TruncationPolicy policy_of(const RunConfig& c, double default_tail_tol = 1e-6)
{
    TruncationPolicy p;
    p.n_max = c.cutoff;
    p.tail_tol = c.tail_tol.value_or(default_tail_tol);
    p.validate();
    return p;
}

std::size_t positive(std::size_t v, const char* field)
{
    if (v < 1) {
        throw UsageError(std::string(field) + " must be positive");
    }
    return v;
}

Output cmd_kernel(const RunConfig& c)
{
    const FracExponent sigma(c.sigma);
    const std::size_t N = positive(c.n.value_or(10), "--n");
    const auto a = kernel::kernel_section(sigma, N);
    Output o;
    o.table.columns.push_back("m");
    for (std::size_t j = 1; j <= N; ++j) {
        o.table.columns.push_back("K_sigma_n" + std::to_string(j));
    }
    for (std::size_t i = 0; i < N; ++i) {
        std::vector<report::Cell> row{as_int(i + 1)};
        for (std::size_t j = 0; j < N; ++j) {
            row.emplace_back(a(i, j));
        }
        o.table.rows.push_back(std::move(row));
    }
    return o;
}

Output cmd_potential(const RunConfig& c)
{
    const FracExponent sigma(c.sigma);
    const auto policy = policy_of(c);
    const std::size_t last = positive(c.n_max.value_or(10), "--n-max");
    Output o;
    o.table.columns = {"n", "R_sigma", "R_sigma_rowsum", "tail_lower", "tail_upper", "bracketed"};
    for (std::size_t n = 1; n <= last; ++n) {
        const double r = kernel::potential_term(sigma, n);
        const auto sum = kernel::potential_oracle(sigma, n, policy);
        const bool ok = sum.brackets(r, 1e-12 * (1.0 + std::fabs(r)));
        o.pass = o.pass && ok;
        o.table.rows.push_back(
            {as_int(n), r, sum.value, sum.tail.lower, sum.tail.upper, std::string(ok ? "true" : "false")});
    }
    o.extra["cutoff"] = as_int(policy.n_max);
    return o;
}

Output cmd_riesz(const RunConfig& c)
{
    const RieszIndex alpha(require_alpha(c));
    const std::size_t last = positive(c.n_max.value_or(10), "--n-max");
    Output o;
    o.table.columns = {"n", "I_alpha", "I_alpha_quadrature", "abs_diff"};
    for (std::size_t n = 1; n <= last; ++n) {
        const double closed = riesz::riesz_potential(alpha, n);
        const double quad = riesz::riesz_oracle(alpha, n, 0.1 * c.tol);
        const double d = std::fabs(closed - quad);
        o.pass = o.pass && d <= c.tol;
        o.table.rows.push_back({as_int(n), closed, quad, d});
    }
    o.extra["tolerance"] = c.tol;
    o.extra["asymptotic_constant"] = riesz::riesz_asymptotic_constant(alpha);
    return o;
}

Output cmd_green(const RunConfig& c)
{
    const FracExponent sigma(c.sigma);
    const std::size_t last = positive(c.n_max.value_or(10), "--n-max");
    Output o;
    o.table.columns = {"n", "G_sigma"};
    for (std::size_t n = 1; n <= last; ++n) {
        o.table.rows.push_back({as_int(n), riesz::green_function(sigma, n)});
    }
    return o;
}

Output cmd_weights(const RunConfig& c)
{
    const WeightSpec spec(c.sigma, alpha_or_critical(c));
    const std::size_t last = positive(c.n_max.value_or(10), "--n-max");
    Output o;
    o.table.columns = {"n", "W_alpha_sigma", "W_op_sigma"};
    for (std::size_t n = 1; n <= last; ++n) {
        o.table.rows.push_back(
            {as_int(n), weights::hardy_weight(spec, n), weights::optimal_weight(spec.sigma(), n)});
    }
    const auto cls = weights::classify(spec);
    o.extra["alpha"] = spec.alpha();
    o.extra["Psi_sigma_alpha"] = weights::psi_constant(spec.sigma(), spec.alpha());
    o.extra["C_sigma"] = weights::critical_constant(spec.sigma());
    o.extra["classification"] = {
        {"is_hardy", cls.is_hardy}, {"is_critical", cls.is_critical}, {"is_optimal", cls.is_optimal}};
    return o;
}

Output cmd_compare_kpp(const RunConfig& c)
{
    const std::size_t last = c.n_max.value_or(20);
    if (last < 2) {
        throw UsageError("--n-max must be at least 2 for 'compare-kpp'");
    }
    const auto cmp = weights::weight_comparison(last);
    Output o;
    o.table.columns = {"n", "W_KPP", "W_op_1", "diff"};
    for (const auto& r : cmp.rows) {
        o.table.rows.push_back({as_int(r.n), r.kpp, r.op1, r.diff});
    }
    o.extra["first_crossing"] = cmp.first_crossing ? json(as_int(*cmp.first_crossing)) : json(nullptr);
    o.extra["kpp_above_at_one"] = cmp.kpp_above_at_one;
    o.extra["op_above_after_crossing"] = cmp.op_above_after_crossing;
    o.pass = cmp.kpp_above_at_one && cmp.op_above_after_crossing && cmp.first_crossing == 2;
    return o;
}

Output cmd_gsr_check(const RunConfig& c)
{
    const WeightSpec spec(c.sigma, alpha_or_critical(c));
    const auto policy = policy_of(c);
    const std::size_t trials = positive(c.n.value_or(100), "--n");
    verification::SeededUniform rng(c.seed);
    Output o;
    o.table.columns = {"trial", "support_start", "support_len", "Q_W", "Q_alpha_sigma", "residual", "tolerance",
                       "pass"};
    for (std::size_t t = 0; t < trials; ++t) {
        const std::size_t start = 1 + static_cast<std::size_t>(rng.next() * 10.0);
        const std::size_t len = 1 + static_cast<std::size_t>(rng.next() * 30.0);
        std::vector<double> values(len);
        for (double& v : values) {
            v = rng.next(-1.0, 1.0);
        }
        const auto r = criticality::gsr_residual(spec, LatticeFunction(start, std::move(values)), policy);
        o.pass = o.pass && r.pass();
        o.table.rows.push_back({as_int(t), as_int(start), as_int(len), r.energy.value, r.simplified.value,
                                r.residual, r.tolerance, std::string(r.pass() ? "true" : "false")});
    }
    o.extra["alpha"] = spec.alpha();
    return o;
}

Output cmd_null_sequence(const RunConfig& c)
{
    const WeightSpec spec(c.sigma, alpha_or_critical(c));
    const auto policy = policy_of(c, 1e-4);
    const std::size_t k_last = c.n_max.value_or(64);
    std::vector<std::size_t> ks;
    for (std::size_t k = 8; k <= k_last; k *= 2) {
        ks.push_back(k);
    }
    if (ks.empty()) {
        throw UsageError("--n-max must be at least 8 for 'null-sequence'");
    }
    const auto curve = criticality::null_energy_curve(spec, ks, policy);
    Output o;
    o.table.columns = {"k", "Q_alpha_sigma", "Q_log_k", "tail_lower", "tail_upper"};
    bool decreasing = true;
    bool log_bounded = true;
    const double first_log = curve.front().energy.value * std::log(static_cast<double>(curve.front().k));
    for (std::size_t i = 0; i < curve.size(); ++i) {
        const auto& p = curve[i];
        const double q_log = p.energy.value * std::log(static_cast<double>(p.k));
        if (i > 0) {
            const auto& prev = curve[i - 1].energy;
            decreasing = decreasing && p.energy.value + p.energy.tail.upper < prev.value + prev.tail.lower;
        }
        log_bounded = log_bounded && q_log <= 2.0 * first_log;
        o.table.rows.push_back(
            {as_int(p.k), p.energy.value, q_log, p.energy.tail.lower, p.energy.tail.upper});
    }
    const bool critical = weights::classify(spec).is_optimal;
    o.pass = decreasing && (!critical || log_bounded);
    o.extra["alpha"] = spec.alpha();
    o.extra["strictly_decreasing"] = decreasing;
    if (critical) {
        o.extra["log_weighted_bounded"] = log_bounded;
    }
    return o;
}

Output cmd_null_critical(const RunConfig& c)
{
    const WeightSpec spec(c.sigma, alpha_or_critical(c));
    const std::size_t last = c.n_max.value_or(100000);
    std::vector<std::size_t> Ns;
    for (std::size_t N = 1000; N <= last; N *= 10) {
        Ns.push_back(N);
        Ns.push_back(2 * N);
    }
    if (Ns.empty()) {
        throw UsageError("--n-max must be at least 1000 for 'null-critical'");
    }
    std::sort(Ns.begin(), Ns.end());
    const auto S = criticality::null_criticality_sums(spec, Ns);
    std::map<std::size_t, double> at;
    for (std::size_t i = 0; i < Ns.size(); ++i) {
        at[Ns[i]] = S[i];
    }
    Output o;
    o.table.columns = {"N", "S_N", "S_2N", "increment"};
    for (std::size_t N = 1000; N <= last; N *= 10) {
        o.table.rows.push_back({as_int(N), at[N], at[2 * N], at[2 * N] - at[N]});
    }
    o.extra["alpha"] = spec.alpha();
    o.extra["critical_alpha"] = spec.critical_alpha();
    return o;
}

Output cmd_hardy_constant(const RunConfig& c)
{
    const FracExponent sigma(c.sigma);
    const std::size_t N = c.n.value_or(256);
    if (N < 2) {
        throw UsageError("--n must be at least 2 for 'hardy-constant'");
    }
    const auto est = criticality::hardy_constant_estimate(sigma, N, positive(c.window_start, "--window-start"));
    Output o;
    o.table.columns = {"window_start", "N", "lambda_min", "C_sigma", "iterations"};
    o.table.rows.push_back({as_int(est.window_start), as_int(est.window_len), est.lambda_min,
                            weights::critical_constant(sigma.value()), static_cast<std::int64_t>(est.iterations)});
    o.pass = est.lambda_min >= -1e-9;
    return o;
}

Output cmd_verify(const RunConfig& c)
{
    Output o;
    o.is_records = true;
    if (c.verify_kind == "appendix") {
        o.records = verification::appendix_suite(c.seed);
        auto j = verification::j_beta_suite();
        o.records.insert(o.records.end(), j.begin(), j.end());
    } else if (c.verify_kind == "signs") {
        o.records = verification::sign_suite(c.n.value_or(200));
    } else if (c.verify_kind == "mellin") {
        TruncationPolicy p = policy_of(c);
        p.n_max = c.n_max.value_or(1000000);
        o.records = verification::mellin_suite(positive(c.n.value_or(20), "--n"), p);
    } else if (c.verify_kind == "asymptotics") {
        o.records = verification::asymptotics_suite();
    } else {
        throw UsageError("verify kind must be one of appendix, signs, mellin, asymptotics (got '" + c.verify_kind +
                         "')");
    }
    o.pass = std::all_of(o.records.begin(), o.records.end(), [](const ResidualRecord& r) { return r.pass; });
    o.table = report::records_to_table(o.records);
    return o;
}

const std::map<std::string, std::function<Output(const RunConfig&)>>& commands()
{
    static const std::map<std::string, std::function<Output(const RunConfig&)>> table{
        {"kernel", cmd_kernel},
        {"potential", cmd_potential},
        {"riesz", cmd_riesz},
        {"green", cmd_green},
        {"weights", cmd_weights},
        {"compare-kpp", cmd_compare_kpp},
        {"gsr-check", cmd_gsr_check},
        {"null-sequence", cmd_null_sequence},
        {"null-critical", cmd_null_critical},
        {"hardy-constant", cmd_hardy_constant},
        {"verify", cmd_verify},
    };
    return table;
}

json parameters_json(const RunConfig& c)
{
    json p = {{"sigma", c.sigma}, {"window_start", as_int(c.window_start)}, {"tol", c.tol},
              {"seed", c.seed},   {"cutoff", as_int(c.cutoff)}};
    p["alpha"] = c.alpha ? json(*c.alpha) : json(nullptr);
    p["tail_tol"] = c.tail_tol ? json(*c.tail_tol) : json(nullptr);
    p["n"] = c.n ? json(as_int(*c.n)) : json(nullptr);
    p["n_max"] = c.n_max ? json(as_int(*c.n_max)) : json(nullptr);
    if (!c.verify_kind.empty()) {
        p["verify_kind"] = c.verify_kind;
    }
    return p;
}

void emit(const RunConfig& c, const Output& o, std::ostream& os)
{
    const bool json_out = c.format == Format::json || (c.format == Format::automatic && o.is_records);
    if (!json_out) {
        report::write_csv(o.table, os);
        return;
    }
    if (o.is_records) {
        json arr = json::array();
        for (const auto& r : o.records) {
            arr.push_back(report::record_to_json(r));
        }
        report::write_json(arr, os);
        return;
    }
    json doc = report::table_to_json(o.table);
    doc["command"] = c.command;
    doc["parameters"] = parameters_json(c);
    doc["pass"] = o.pass;
    for (const auto& [k, v] : o.extra.items()) {
        doc[k] = v;
    }
    report::write_json(doc, os);
}

} // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    const auto& table = commands();
    const auto it = table.find(config.command);
    if (it == table.end()) {
        err << "error: unknown command '" << config.command << "'\n";
        return exit_code::usage;
    }
    Output o;
    try {
        o = it->second(config);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_code::usage;
    } catch (const DomainError& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_code::usage;
    } catch (const Error& e) {
        err << "failure: " << e.what() << '\n';
        return exit_code::failure;
    }
    if (config.output_path) {
        std::ofstream file(*config.output_path, std::ios::binary | std::ios::trunc);
        if (!file) {
            err << "usage error: --output: cannot open '" << *config.output_path << "'\n";
            return exit_code::usage;
        }
        emit(config, o, file);
    } else {
        emit(config, o, out);
    }
    if (!o.pass) {
        err << "check failed: " << config.command << '\n';
        return exit_code::failure;
    }
    return exit_code::pass;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Hardy weights for the fractional Laplacian on the discrete half-line"};
    app.fallthrough();
    app.require_subcommand(1);

    RunConfig cfg;
    double alpha = 0.0;
    std::size_t n = 0;
    std::size_t n_max = 0;
    std::string output;
    std::string format = "auto";

    app.add_option("--sigma", cfg.sigma, "Fractional exponent sigma")->capture_default_str();
    auto* alpha_opt = app.add_option("--alpha", alpha, "Riesz / weight index alpha");
    auto* n_opt = app.add_option("--n", n, "Size or count (section size, trials, last site)");
    auto* n_max_opt = app.add_option("--n-max", n_max, "Last index of a table or largest cutoff");
    app.add_option("--window-start", cfg.window_start, "First index of the eigenvalue window")
        ->capture_default_str();
    app.add_option("--tol", cfg.tol, "Absolute tolerance for quadrature checks")->capture_default_str();
    app.add_option("--seed", cfg.seed, "Seed for randomized suites")->capture_default_str();
    app.add_option("--cutoff", cfg.cutoff, "Truncation index for infinite sums")->capture_default_str();
    double tail_tol = 1e-6;
    auto* tail_tol_opt = app.add_option("--tail-tol", tail_tol, "Largest accepted tail-interval width");
    auto* output_opt = app.add_option("--output", output, "Write the artifact to this file");
    app.add_option("--format", format, "csv, json or auto")
        ->check(CLI::IsMember({"auto", "csv", "json"}))
        ->capture_default_str();

    for (const auto& [name, fn] : commands()) {
        auto* sub = app.add_subcommand(name);
        if (name == "verify") {
            sub->add_option("kind", cfg.verify_kind, "appendix | signs | mellin | asymptotics")
                ->required()
                ->check(CLI::IsMember({"appendix", "signs", "mellin", "asymptotics"}));
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_code::pass : exit_code::usage;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    if (alpha_opt->count() > 0) {
        cfg.alpha = alpha;
    }
    if (n_opt->count() > 0) {
        cfg.n = n;
    }
    if (n_max_opt->count() > 0) {
        cfg.n_max = n_max;
    }
    if (tail_tol_opt->count() > 0) {
        cfg.tail_tol = tail_tol;
    }
    if (output_opt->count() > 0) {
        cfg.output_path = output;
    }
    cfg.format = format == "csv" ? Format::csv : format == "json" ? Format::json : Format::automatic;
    return run(cfg, out, err);
}

} // namespace hardy::cli
