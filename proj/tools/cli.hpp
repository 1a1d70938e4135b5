#pragma once

#include <iosfwd>

namespace cbwt::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2, kIo = 3, kLimit = 4 };

// Entry point of the cbwt tool; output goes to out, diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cbwt::cli
