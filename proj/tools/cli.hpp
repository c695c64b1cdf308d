#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schreier::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

// Runs one command line (without the program name) and returns the exit code.
// Normal output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schreier::cli
