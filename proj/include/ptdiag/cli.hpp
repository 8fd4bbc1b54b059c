#pragma once

#include <iosfwd>

namespace ptdiag {

// Exit codes: 0 diagonalizable or analysis complete, 3 defective (numeric
// mode), 1 input error, 2 internal invariant violation.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitInvariant = 2;
inline constexpr int kExitDefective = 3;

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ptdiag
