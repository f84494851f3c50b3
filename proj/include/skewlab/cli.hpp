#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace skewlab::cli {

/// Exit codes of the command-line tool.
enum Exit : int { ok = 0, invariant_violation = 1, bad_parameters = 2, budget_exceeded = 3 };

/// Runs one command line (args exclude the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skewlab::cli
