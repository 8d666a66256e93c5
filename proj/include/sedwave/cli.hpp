#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sedwave {

/// Exit codes: 0 success, 1 domain or verification failure, 2 usage or parse
/// failure.
enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2 };

/// Runs the command line `args` (args[0] is the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sedwave
