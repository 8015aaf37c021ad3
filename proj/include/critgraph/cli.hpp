#pragma once

#include <iosfwd>

namespace critgraph {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitPass = 0,
  kExitCheckFailed = 1,
  kExitUsage = 2,
  kExitInconclusive = 3,
};

/// Runs the command line. The text summary goes to `out`; diagnostics and
/// progress go to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace critgraph
