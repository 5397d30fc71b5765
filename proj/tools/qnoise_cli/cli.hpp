#pragma once

#include <ostream>
#include <span>
#include <string>

namespace qnoise::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;   // I/O and other runtime failures
inline constexpr int kExitConfig = 2;  // invalid config, flags or values
inline constexpr int kExitOracle = 3;  // a Monte-Carlo check failed

/// Runs the command line `args` (args[0] is the program name). Data goes to
/// files or `out`; diagnostics go to `err`, with ANSI color when `color`.
int cli_main(std::span<const std::string> args, std::ostream& out, std::ostream& err,
             bool color = false);

}  // namespace qnoise::cli
