#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace paradd::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitFailed = 2;

/// Runs the command line `args` (args[0] is the program name).
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace paradd::cli
