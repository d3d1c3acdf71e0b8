#pragma once

#include <iosfwd>

namespace bnloci {

enum ExitCode { kExitOk = 0, kExitUsage = 1, kExitInternal = 2, kExitIO = 3 };

/// Entry point of the bnloci tool. Writes results to out and diagnostics to
/// err; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bnloci
