#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace jetdet::cli {

enum ExitCode : int {
  kOk = 0,
  kDisagreement = 1,
  kUsage = 2,
  kCapped = 3,
};

/// Parses `args` (program name excluded) and runs one subcommand. The report
/// goes to `out` (or the --out file); failures print one line to `err`,
/// prefixed "error[usage]:", "error[cap]:", "error[internal]:" or
/// "mismatch:".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jetdet::cli
