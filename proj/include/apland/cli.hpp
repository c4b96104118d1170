#pragma once

#include <iosfwd>

namespace apland {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitRuntime = 2;

// Entry point of the `apland` tool. Subcommands: run, median, measure,
// aggregate, render, functions.
int cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace apland
