#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sidon::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,  // an acceptance criterion or invariant did not hold
  kUsage = 2,
  kRejected = 3,     // the request was refused (resource budget, domain error)
};

/// Parses `args` (without the program name) and runs one subcommand. Results go to
/// --out when given, otherwise to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sidon::cli
