#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace puiseux::tools {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitClaimFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

/// Runs the command line `args` (args[0] is the program name). `in` feeds the
/// REPL.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace puiseux::tools
