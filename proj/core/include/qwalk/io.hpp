#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "qwalk/config.hpp"
#include "qwalk/observables.hpp"
#include "qwalk/state.hpp"

namespace qwalk::cli {

/// Shortest representation that still round-trips a double exactly
/// (17 significant digits).
std::string format_double(double value);

/// Wave-function CSV. First line is a `# t=<t>` marker, then the fixed
/// column order:
///   n,re_psi_plus,im_psi_plus,re_psi_minus,im_psi_minus,rho,magnetization
/// With parity_filter only the allowed sublattice is emitted; without it
/// every site in [-t, t] appears, forbidden ones as exact zeros.
std::string state_csv(const WalkState& state, bool parity_filter);

/// Inverse of state_csv; amplitudes reproduce the printed digits exactly.
WalkState parse_state_csv(const std::string& text);

/// Same payload as state_csv in JSON form.
std::string state_json(const WalkState& state, bool parity_filter);

/// PMF CSV (`# t=` marker, then n,rho[,gaussian_ref]).
std::string pmf_csv(long long t, const Pmf& rho, const Pmf* gaussian, bool parity_filter);

/// Creates parent directories as needed; throws std::system_error on failure.
void write_text_file(const std::filesystem::path& path, const std::string& content);

std::string read_text_file(const std::filesystem::path& path);

struct CheckpointSummary {
    long long t = 0;
    double mean = 0.0;
    double variance = 0.0;
    double p_plus = 0.0;
    double p_minus = 0.0;
    double total_probability = 0.0;
};

/// Run summary document. Everything in it is byte-stable for a fixed config
/// and seed except the wall_time_ms field.
std::string run_summary_json(const RunConfig& config,
                             const std::vector<CheckpointSummary>& checkpoints,
                             const std::vector<std::uint64_t>& member_seeds,
                             double wall_time_ms);

/// Schedule echo used inside summaries and compare reports.
std::map<std::string, std::string> schedule_echo(const Schedule& schedule);

}  // namespace qwalk::cli
