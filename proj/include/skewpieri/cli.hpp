#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace skewpieri {

/// Runs the command line `args` (program name excluded). Returns 0 on
/// success, 1 when a verification finds a counterexample, 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skewpieri
