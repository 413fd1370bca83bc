#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace boxgap::cli {

/// Runs the command line `args` (without the program name).
/// Exit codes: 0 success, 1 validation/usage error or failed check,
/// 2 budget or feasibility error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace boxgap::cli
