#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bnperm {

enum class OutputFormat { plain, json, csv };

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsageError = 2;

/// Runs the command line `args` (without the program name), writing data to
/// `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bnperm
