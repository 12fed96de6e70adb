#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace affmon::cli {

inline constexpr const char* tool_version = "1.0.0";

// Exit codes shared by every subcommand.
inline constexpr int exit_yes = 0;          // verdict YES or plain success
inline constexpr int exit_no = 1;           // verdict NO, or a rejected certificate
inline constexpr int exit_unsupported = 2;  // hypotheses not met, center rejected
inline constexpr int exit_usage = 3;        // usage, parse or malformed input
inline constexpr int exit_budget = 4;       // oracle budget exhausted

/// The whole command line surface, in-process: parses args, writes the
/// report to out and diagnostics to err, returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace affmon::cli
