#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace atoral::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitAnomaly = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. Results go to `out` (or the --out file), diagnostics
/// to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace atoral::cli
