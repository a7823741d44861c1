#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace mlcd {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

/// Runs the `mlcd` command line. `args` excludes the program name. Results go
/// to `out` (or the --output file), diagnostics to `err`.
int cli_main(std::span<const std::string> args, std::ostream& out,
             std::ostream& err);

}  // namespace mlcd
