#pragma once

#include <iosfwd>

namespace ccount {

/// Exit codes of the command-line front end.
enum ExitCode : int { ExitOk = 0, ExitFail = 1, ExitUsage = 2, ExitInternal = 3 };

/// Entry point for `check`, `registers`, `filter`, `bench` and `oracle`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ccount
