#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace totdom {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitViolation = 2;

/// Runs the command line `args` (without the program name). Reports go to
/// `out`, diagnostics to `err`. Returns kExitOk, kExitUsage for usage, parse
/// and precondition errors, or kExitViolation when a sweep finds a
/// counterexample to a checked claim.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace totdom
