#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sector_metrics {

/// Process exit statuses of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitViolation = 1,
    kExitDomain = 2,
    kExitUnsupported = 3,
    kExitIo = 4,
    kExitUsage = 64,
};

/// Runs the tool on args (without the program name). Human-readable output
/// and reports without --output go to out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sector_metrics
