#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qsfmf::cli {

enum ExitCode : int { kSuccess = 0, kNegative = 1, kUsage = 2, kBudget = 3 };

/// Runs one invocation. `args` excludes the program name. Returns 0 on success or a
/// verified report, 1 when the answer is "not fmf" or a disagreement was found, 2 on a
/// usage error and 3 when a tableau budget is exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qsfmf::cli
