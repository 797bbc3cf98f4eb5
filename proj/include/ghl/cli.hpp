#pragma once

#include <iosfwd>

namespace ghl {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // verification failed, or a runtime error
inline constexpr int kExitUsage = 2;    // bad flags, out-of-domain parameters, unparsable input

/// Entry point behind the `ghl` executable. Subcommands: hierarchy, solution,
/// verify, evolve, illposed, periodic, suite.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ghl
