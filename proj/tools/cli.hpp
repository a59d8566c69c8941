#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mkfib::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

/// Runs one mkfib invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mkfib::cli
