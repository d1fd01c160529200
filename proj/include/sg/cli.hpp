#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sg::cli {

// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,
  kUsage = 2,
  kDisagreement = 3,
  kBudget = 4,
  kAborted = 130,
};

/// Runs the `sg` command line with `args` (program name excluded), reading
/// play-mode moves from `in`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace sg::cli
