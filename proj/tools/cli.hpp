#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quantoid::cli {

/// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
/// share: analyzable but not ideal; expand: 2-factor comparison failed.
inline constexpr int kExitNegative = 1;
/// Malformed input, usage errors, and library errors.
inline constexpr int kExitError = 2;

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quantoid::cli
