#pragma once

#include <iosfwd>

namespace tinter::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kPropertyFails = 1;
inline constexpr int kInputError = 2;
inline constexpr int kCapExceeded = 3;

/// Parse argv and run one subcommand: bound, search, shift, verify, kneser,
/// enumerate or repro.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tinter::cli
