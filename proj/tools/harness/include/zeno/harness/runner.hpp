#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "zeno/harness/config.hpp"
#include "zeno/harness/emit.hpp"

namespace zeno::harness {

/// Exit statuses of the command line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitCheckFailed = 1,
    kExitConfig = 2,
    kExitConvergence = 3,
    kExitInfeasible = 4,
};

const std::vector<std::string>& subcommands();

/// Computes the data table of one subcommand. Library errors propagate.
Table run_table(const std::string& subcommand, const RunConfig& cfg);

/// Rate constant fitted to direct-simulation P_e at Omega = 0 on the t grid.
double calibrated_rate_constant(const RunConfig& cfg);

/**
 Runs a subcommand end to end: computes the table, writes data (and a
 .meta.json sidecar for file output) and maps failures to an exit code with
 a one-line JSON error record on `err`.
 */
int execute(const std::string& subcommand, const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// One-line JSON error record.
std::string error_record(const std::string& kind, const std::string& message, int code);

} // namespace zeno::harness
