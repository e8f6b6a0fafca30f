#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kostant::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kInvalidInput = 2;
inline constexpr int kRoutesDisagree = 3;
inline constexpr int kBadFlags = 64;

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kostant::cli
