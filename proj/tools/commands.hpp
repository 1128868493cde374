#pragma once

#include <ostream>

namespace raagobs::cli {

/// Stable process exit codes.
enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 2,
    exit_budget = 3,
    exit_verification_failed = 4,
};

/// Runs the command line front end; JSON (or DOT) goes to `out`, one-line
/// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace raagobs::cli
