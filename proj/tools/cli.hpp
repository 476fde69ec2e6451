#pragma once

#include <iosfwd>

namespace diracbound {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitPass = 0, kExitFailure = 1, kExitUsage = 2 };

/// Parses argv, runs one command and writes its record to `out`; diagnostics go to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace diracbound
