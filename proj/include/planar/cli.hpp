#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace planar::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Entry point behind the planarfn executable; `args` excludes the program name.
/// Writes JSON to `out` (or to the --json file) and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace planar::cli
