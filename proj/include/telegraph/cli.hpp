#pragma once

#include <iosfwd>

namespace telegraph::cli {

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;

/// Entry point for the `solve`, `bench` and `stability` subcommands. Data goes
/// to `out` unless --output names a file; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace telegraph::cli
