#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace densepart::cli {

/// Exit codes: 0 success, 1 validation error, 2 budget or convergence failure.
enum ExitCode : int { kOk = 0, kValidation = 1, kBudget = 2 };

/// Runs one invocation (args exclude the program name). Results go to the
/// --output file or `out`; diagnostics go to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace densepart::cli
