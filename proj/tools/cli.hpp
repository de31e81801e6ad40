#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace veronese::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kSuccess = 0,
  kRefuted = 1,
  kInvalidInput = 2,
  kBudgetExceeded = 3,
  kInternalError = 4,
};

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace veronese::cli
