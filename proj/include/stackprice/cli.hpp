#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stackprice::cli {

/// Exit statuses of the `stackprice` command.
enum ExitCode : int {
  kOk = 0,
  kClaimMismatch = 1,
  kInvalidInput = 2,
  kIncompatibleAlgorithm = 3,
  kSizeLimit = 4,
};

/// Runs the command line `args` (args[0] is the program name) and returns
/// the exit status. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stackprice::cli
