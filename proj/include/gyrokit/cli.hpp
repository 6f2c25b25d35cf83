#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gyrokit::cli {

/// Exit statuses. Mathematical negatives and usage problems never share a code.
enum ExitCode : int { kSuccess = 0, kPropertyFails = 1, kUsageError = 2 };

/// Runs one command line (args[0] is the program name). Results go to
/// `out`, diagnostics to `err`. With --json exactly one JSON document is
/// written to `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gyrokit::cli
