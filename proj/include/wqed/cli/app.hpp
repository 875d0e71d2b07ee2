#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace wqed::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitComputation = 1;
inline constexpr int kExitUsage = 2;

/// Invalid command line or config file.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads `--config <file>` (key=value lines, '#' comments) out of `args` and
/// appends every key not already given on the command line as a flag, so
/// explicit flags take precedence. `args` excludes the program name.
std::vector<std::string> merge_config(std::vector<std::string> args);

/// Entry point shared by the `wqed` executable and the tests; `args`
/// excludes the program name. Returns the process exit status.
int run(std::vector<std::string> args);

}  // namespace wqed::cli
