#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quandle::cli {

inline constexpr const char* tool_version = "0.1.0";
inline constexpr int schema_version = 1;

enum ExitCode : int { pass = 0, check_failed = 1, usage_error = 2 };

/// Runs one command line (without the program name). Reports go to out,
/// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quandle::cli
