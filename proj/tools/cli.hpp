#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fiscalstab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation. `args` excludes the program name. The report goes to
/// `out` (or the --out file), diagnostics and text/csv warnings to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fiscalstab::cli
