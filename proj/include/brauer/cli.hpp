#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace brauer {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitUsage = 64;

/// Runs the `brauer` command line. `args` excludes the program name. Errors
/// go to `err` as one JSON object per line; `out` carries only results.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace brauer
