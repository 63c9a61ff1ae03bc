#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flatjava {

namespace exit_code {
inline constexpr int Ok = 0;
inline constexpr int Warnings = 1;  // only with --strict
inline constexpr int Failed = 2;    // parse, model or flattening error
inline constexpr int Usage = 64;
}  // namespace exit_code

/// Runs the command line `args` (without the program name). Reports go to
/// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flatjava
