#pragma once

#include <string>
#include <vector>

namespace heatlab::cli {

/// Exit codes: 0 success, 1 assertion/check failure, 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command-line driver. `args` excludes the program name.
int run(const std::vector<std::string>& args);

int run(int argc, const char* const* argv);

}  // namespace heatlab::cli
