#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stasheff::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kMathFailure = 2,
  kBudgetExceeded = 3,
};

/// Runs one command line (args excludes the program name). Results go to
/// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stasheff::cli
