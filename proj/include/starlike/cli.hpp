#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace starlike {

/// Exit codes: 0 success, 1 a verification claim failed, 2 usage error or a
/// violated hypothesis (domain, regime, range), 3 I/O failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitClaimFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

/// Entry point of the `starlike` tool; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace starlike
