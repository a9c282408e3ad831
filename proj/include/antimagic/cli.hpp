#pragma once

#include <iosfwd>

namespace antimagic::cli {

// Exit codes are a stable contract.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUnsupported = 2;
inline constexpr int kExitParseError = 3;

/// Runs one command line (argv[0] is the program name). Normal output goes
/// to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace antimagic::cli
