#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace topos {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCap = 3;

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics to `err`. Returns the process exit code.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace topos
