#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace braidkit::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kBudgetExhausted = 2,
  kInvariantViolation = 3,
};

/// Runs one command. `args` excludes the program name. Reports go to `out`
/// as single-line JSON (or DOT for `surface --dot`); notes go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace braidkit::cli
