#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace toricmld::cli {

/// Exit codes of the toricmld tool.
enum ExitCode : int {
  kOk = 0,
  kViolation = 1,  // verify found a counterexample
  kUsage = 2,      // bad arguments or unparsable input file
  kInvalid = 3,    // input parses but is not a valid fan / log pair
};

/// Runs the tool on `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toricmld::cli
