#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace hardy::cli {

enum class Format { automatic, csv, json };

struct RunConfig {
    std::string command;                ///< subcommand name, e.g. "kernel"
    std::string verify_kind;            ///< appendix | signs | mellin | asymptotics
    double sigma = 0.5;
    std::optional<double> alpha;
    std::optional<std::size_t> n;
    std::optional<std::size_t> n_max;
    std::size_t window_start = 1;
    double tol = 1e-8;
    std::uint64_t seed = 7;
    std::size_t cutoff = std::size_t{1} << 17; ///< truncation for infinite sums
    std::optional<double> tail_tol; ///< default 1e-6, 1e-4 for null-sequence
    std::optional<std::string> output_path;
    Format format = Format::automatic;
};

namespace exit_code {
inline constexpr int pass = 0;
inline constexpr int failure = 1;
inline constexpr int usage = 2;
} // namespace exit_code

/// Executes one subcommand and writes its artifact to output_path or `out`.
/// Diagnostics go to `err`. Returns 0 on pass, 1 on a failed check, 2 on a
/// usage error.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and calls run().
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace hardy::cli
