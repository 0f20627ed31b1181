#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace girard::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBadGraph = 3;

/// Runs one girard_lab invocation. args excludes the program name. The text
/// summary goes to out, diagnostics to err, and the JSON report to the
/// --out file ("-" for out) when requested.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace girard::cli
