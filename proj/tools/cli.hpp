#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gruss::cli {

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
  kSuccess = 0,
  /// A hypothesis failed or an inequality was not satisfied.
  kConcern = 1,
  /// Bad usage, unreadable or malformed input.
  kUsage = 2,
};

/// Runs `gruss <args...>` (args excludes the program name) and returns the
/// exit code. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Equation tags accepted by `gruss bound --which`.
std::vector<std::string> bound_tags();

}  // namespace gruss::cli
