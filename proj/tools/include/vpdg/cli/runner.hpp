#pragma once

#include <iosfwd>
#include <string>

#include "vpdg/cli/config.hpp"

namespace vpdg::cli {

enum ExitCode : int { kOk = 0, kUsageError = 1, kSolverFailure = 2 };

/// Thread count after applying the VPDG_THREADS override (0: leave the runtime default).
int effective_threads(const RunConfig& c);

/// Runs the configuration and writes the output bundle into c.output_dir:
/// manifest.json, diagnostics.csv, snapshot_t{t}.csv, bgk_t{t}.csv (self-consistent field runs),
/// ecenter.csv (driven runs) and recurrence_report.csv (advection runs).
/// Files written before a solver failure are kept and the manifest records the failure.
int execute(const RunConfig& c, std::ostream& log);

/// File-name form of a time: shortest round-trip decimal.
std::string time_tag(double t);

}  // namespace vpdg::cli
