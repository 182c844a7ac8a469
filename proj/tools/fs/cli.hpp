#pragma once

#include <iosfwd>

namespace fs_cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;

/// Runs one `fs` invocation. Results go to `out` unless --out names a file;
/// diagnostics go to `err`.
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fs_cli
