#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cotm::cli {

constexpr int kExitPass = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

/// Environment variable holding the default precision in digits.
inline constexpr const char* kDigitsEnv = "COTMOMENTS_DIGITS";

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cotm::cli
