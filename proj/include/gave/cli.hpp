#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace gave {

/// Exit codes: 0 success, 1 solver failure, 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitSolverFailure = 1;
inline constexpr int kExitUsage = 2;

/// Entry point behind the `gave` executable. `args` excludes the program
/// name. Subcommands: gen, solve, sweep, certify, bench.
int cli_main(std::span<const std::string> args, std::ostream& out, std::ostream& err);

} // namespace gave
