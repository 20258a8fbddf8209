#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace diskwalk::cli {

enum ExitCode : int {
  ok = 0,
  usage_error = 2,
  capacity_failure = 3,
  counterexample_mismatch = 4,
};

/// Runs the command line `args` (program name excluded) and returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Shortest decimal text that reads back as the same double.
std::string shortest(double x);

}  // namespace diskwalk::cli
