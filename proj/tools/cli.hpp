#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace randsub::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;
inline constexpr int kInvalidInput = 2;
inline constexpr int kResourceLimit = 3;
inline constexpr int kNonConvergence = 4;

// Runs one command line (without the program name) and returns the exit code.
// Errors and the scan summary (unless --out is given) go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace randsub::cli
