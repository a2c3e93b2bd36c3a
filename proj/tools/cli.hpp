#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace astute::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kInvalidFlags = 2,
  kBudget = 3,
  kMismatch = 4,
  kVerifyFailed = 5,
};

/// Runs one command line (without the program name). Data goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace astute::cli
