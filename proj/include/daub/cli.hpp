#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace daub {

/// Environment variable holding the default --digits.
inline constexpr const char* kDigitsEnvVar = "DAUBZ_DIGITS";

/// Runs the command line `args` (without the program name). Returns the exit
/// status: 0 success, 1 computation or verification failure, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace daub
