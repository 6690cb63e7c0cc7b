#ifndef BFAM_RUN_HPP
#define BFAM_RUN_HPP

#include <filesystem>

#include "bfam/runconfig.hpp"

namespace bfam {

// CLI exit codes.
inline constexpr int exit_pass = 0;
inline constexpr int exit_check_failure = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_breakdown = 3;

/// Executes one configured run and writes invariants.csv, frames/ and
/// summary.json under output_dir. Returns the process exit code. On mid-run
/// breakdown the summary still lands on disk with the partial series.
int run_simulation(const RunConfig& cfg, const std::filesystem::path& output_dir, bool quiet);

} // namespace bfam

#endif
