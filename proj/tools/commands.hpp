#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace conformal::cli {

inline constexpr const char* kRecordSchema = "conformal.cli/1";

enum ExitCode : int { kOk = 0, kUsage = 1, kVerifyFailed = 2, kCeiling = 3 };

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace conformal::cli
