#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace minlen::cli {

/// Process exit codes.
enum ExitCode : int {
    kSuccess = 0,
    kIoError = 1,
    kUsageError = 2,
    kCheckFailed = 3,
};

/// Runs the command line `args` (without the program name), writing data to
/// `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Shortest round-trippable-at-`precision` decimal rendering, independent of the locale.
std::string format_number(double value, int precision);

}  // namespace minlen::cli
