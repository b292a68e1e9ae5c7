#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dendro::cli {

/// Runs the command line front end on `args` (without the program name).
/// Returns 0 on success, 1 for semantic failures, 2 for parse or flag
/// errors and 3 when a size bound or budget is exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dendro::cli
