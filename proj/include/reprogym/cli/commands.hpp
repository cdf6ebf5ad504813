#pragma once

#include <iosfwd>

namespace reprogym::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2 };

/// Full command line front end. Writes normal output to `out` and
/// diagnostics to `err`; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace reprogym::cli
