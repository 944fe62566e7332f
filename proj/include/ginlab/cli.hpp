#pragma once

#include <iosfwd>

namespace ginlab {

/// Exit codes of the command-line front end.
enum ExitCode : int {
    exit_ok = 0,
    exit_verification_failed = 1,
    exit_usage = 2,
    exit_arithmetic_guard = 3,
};

/// Entry point of the `ginlab` tool. Results go to `out` unless --out names a file;
/// diagnostics go to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace ginlab
