#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qwalk/config.hpp"

namespace qwalk::cli {

// Process exit codes shared by every subcommand.
inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;      // usage / config errors
inline constexpr int exit_integrity = 2;  // unitarity or oracle tolerance breach
inline constexpr int exit_io = 3;

/// Command-line overrides applied on top of a parsed config.
struct RunOverrides {
    std::optional<std::uint64_t> seed;
    std::optional<std::vector<long long>> checkpoints;
    std::optional<OutputFormat> format;
    std::optional<bool> parity_filter;
    std::optional<std::string> out_dir;
    int threads = 1;
};

/// Executes one run (or a seed ensemble) and writes per-checkpoint state
/// files, an optional PMF file and summary.json under the output directory.
int cmd_run(RunConfig config, const RunOverrides& overrides, std::ostream& log);

enum class CompareMode { basic, linear_beta_twist, alternating_alpha_twist };

/// Runs both configs to the same T and reports max amplitude difference, max
/// PMF difference, TV distance and (in the twist modes) the gauge-twist
/// residual. The report JSON goes to `log` and, when non-empty, to out_file.
int cmd_compare(const RunConfig& config_a, const RunConfig& config_b, CompareMode mode,
                const std::string& out_file, std::ostream& log);

struct VarySpec {
    std::string key;
    std::vector<std::string> values;  // raw config-literal values
};

/// Cartesian sweep over the varied keys; one run directory per combination
/// plus an aggregated sweep_summary.csv.
int cmd_sweep(const std::string& base_config_text, const std::vector<VarySpec>& varied,
              const std::string& out_dir, int threads, std::ostream& log);

/// Ensemble-of-seeds decoherence study: per-seed variance at each requested
/// time (decohere_variance.csv) and fitted log-log slopes (summary.json).
/// Each of the `seeds` seed groups averages `members` independent runs.
int cmd_decohere(const RunConfig& config, int seeds, int members,
                 std::vector<long long> times, const std::string& out_dir, int threads,
                 std::ostream& log);

/// Test hook for the oracle-check harness: verifies the harness actually
/// detects discrepancies by corrupting one engine amplitude before comparing.
enum class FaultInjection { none, sign_flip };

/// Cross-validates engine, closed forms and the dense evolver over random
/// draws. Nonzero exit on any tolerance breach; draws = 0 passes vacuously
/// with a warning.
int cmd_oracle_check(std::uint64_t seed, long long draws, std::ostream& log,
                     FaultInjection fault = FaultInjection::none);

}  // namespace qwalk::cli
