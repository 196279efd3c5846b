#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bnkit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Reports go to `out`
/// unless --out names a file; diagnostics and the summary line go to `err`.
/// Returns 0 when no violation was found, 1 when one was, 2 on usage or
/// input errors.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace bnkit::cli
