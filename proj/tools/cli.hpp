#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tau::cli {

/// Exit codes: 0 success, 1 verification failure, 2 usage or input error.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsage = 2;

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tau::cli
