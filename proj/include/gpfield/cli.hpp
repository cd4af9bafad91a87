#pragma once

#include <ostream>

namespace gpf {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `gpfield` tool:
///   gpfield <subcommand> --config <path> [--seed N] [--out DIR]
/// Writes one JSON summary to `out` and human-readable diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gpf
