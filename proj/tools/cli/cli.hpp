#pragma once

// treewalk command-line driver. Exit codes are part of the interface:
//   0 success, 1 verification failure, 2 usage/validation error,
//   3 feasibility-guard refusal.

#include <ostream>
#include <string>
#include <vector>

namespace treewalk::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kInfeasible = 3,
};

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace treewalk::cli
