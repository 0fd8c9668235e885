#pragma once

// The `gkm` command line: argument parsing, input resolution, reports.

#include <iosfwd>
#include <string>
#include <vector>

namespace gkm::cli {

enum ExitCode : int {
  kOk = 0,
  kComputationError = 1,
  kUsageError = 2,
  kInconclusive = 3,
};

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gkm::cli
