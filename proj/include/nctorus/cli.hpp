#pragma once

// Command-line frontend. main() forwards to run_cli so tests can drive it
// in-process.
//
// Exit codes: 0 success, 1 verification failure, 2 usage / parse / determinant error.

#include <ostream>
#include <string>
#include <vector>

namespace nct {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nct
