#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace starpoly {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitUsage = 2 };

/// Runs the tool on args (args[0] is the program name). "-" as the value of
/// an expression flag reads that expression from `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace starpoly
