#pragma once

#include <iosfwd>

namespace hkgic::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitIo = 3;

/// Parse argv, run the chosen subcommand and write its output to --out or to
/// `out`. Diagnostics go to `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hkgic::cli
