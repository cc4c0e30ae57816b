#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace prismcat::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

// Runs the command line `prismcat <args...>`; args excludes the program name.
// Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace prismcat::cli
