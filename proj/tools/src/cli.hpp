#pragma once

#include <iosfwd>

namespace netprice::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kInvalidInstance = 2;
inline constexpr int kSolverFailure = 3;

/// Parses argv and runs one subcommand. Results go to `out` unless --out is
/// given, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace netprice::cli
