#pragma once

#include <ostream>

namespace spreadres::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitAssertion = 1;
inline constexpr int kExitInput = 2;

/// Runs one command line. Reports go to `out`, diagnostics to `err`.
/// Returns 0 on success, 1 when a verify suite fails, 2 on input errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace spreadres::cli
