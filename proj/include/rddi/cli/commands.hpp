#pragma once

#include <ostream>

#include "rddi/cli/config.hpp"

namespace rddi::cli {

enum ExitCode : int {
  kSuccess = 0,
  kConfigError = 2,
  kSolverDegenerate = 3,
  kIntegratorAbort = 4,
};

/// Stationary Dicke populations over an (omega, delta) grid.
int cmd_steady(const RunConfig& config, std::ostream& csv, std::ostream& log);
/// Optimal-pulse duration and fidelity per phi.
int cmd_pulse(const RunConfig& config, std::ostream& csv, std::ostream& log);
/// Bell functional of the post-pulse state per phi.
int cmd_bell(const RunConfig& config, std::ostream& csv, std::ostream& log);
/// Time-resolved populations with trace and min-eigenvalue telemetry.
int cmd_trace(const RunConfig& config, std::ostream& csv, std::ostream& log);

/// Dispatches on config.command.
int run(const RunConfig& config, std::ostream& csv, std::ostream& log);

/// Full front end: parse, open --out (or stdout), run. Returns the exit code.
int main_entry(int argc, const char* const* argv, std::ostream& stdout_stream,
               std::ostream& log);

}  // namespace rddi::cli
