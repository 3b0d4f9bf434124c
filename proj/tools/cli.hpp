#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dicolor::cli {

/// Runs one toolkit command. `args` is the command line without the program
/// name; primary output goes to `out`, diagnostics and progress to `err`.
/// Exit codes: 0 success or confirmed, 1 violation / not colorable /
/// counterexample found, 2 usage or input error, 3 resource limit or guard.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dicolor::cli
