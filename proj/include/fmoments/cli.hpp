#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fmoments {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitPass = 0, kExitFailure = 1, kExitUsage = 2, kExitResources = 3 };

/// Runs the command line `args` (without the program name). The report goes
/// to `out` (or the --out file); diagnostics and progress go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fmoments
