#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wfdl::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1, // bad flags, unreadable input, syntax errors
  kInvalid = 2, // validation failures and unmet preconditions
  kCap = 3,
  kBudget = 4,
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace wfdl::cli
