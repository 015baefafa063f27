#pragma once

#include "cli_config.hpp"

#include "fracbody/reports.hpp"

#include <vector>

namespace fracbody::cli {

/// Executes the configured command, writes artifacts under out_dir and
/// prints one summary line per assertion. Returns the process exit code:
/// 0 all assertions pass, 1 an asserted inequality failed. Computation
/// errors propagate as exceptions (mapped to exit 3 by the frontend).
int run(const RunConfig& cfg);

/// The closed-form oracle suite behind the selftest command.
Report selftest_report(const RunConfig& cfg);

}  // namespace fracbody::cli
