#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace opdef::cli {

enum ExitCode : int { kHolds = 0, kFails = 1, kInputError = 2, kInternalError = 3 };

/// Runs one command line (without the program name). The report goes to `out`
/// and diagnostics to `err`. Exit codes: 0 the computation succeeded and its
/// claim holds, 1 a mathematical failure (check failed, no equivalence,
/// obstructed, invalid algebra), 2 bad input, 3 an internal consistency failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace opdef::cli
