#pragma once

#include <iosfwd>

namespace qfock {

enum ExitCode { kExitOk = 0, kExitUsage = 1, kExitCheckFailed = 2 };

/// Parses argv and runs one subcommand. Output goes to out, diagnostics to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qfock
