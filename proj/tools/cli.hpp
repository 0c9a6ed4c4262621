#pragma once

#include <iosfwd>

namespace twitdyn::cli {

/// Process exit codes.
enum ExitCode : int { kOk = 0, kUsage = 1, kValidation = 2, kIo = 3 };

/// Runs one command line. Normal output goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace twitdyn::cli
