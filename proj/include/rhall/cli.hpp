#pragma once

// Command-line front end. Exit codes: 0 success, 1 verification failure,
// 2 usage error, 3 parse or validation error, 4 size bound exceeded,
// 5 any other error.

#include <ostream>
#include <string>
#include <vector>

namespace rhall::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kInvalidInput = 3, kBoundExceeded = 4, kOther = 5 };

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rhall::cli
