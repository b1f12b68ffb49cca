#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace qposet {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// Runs one CLI command. `args` excludes the program name. Results go to
/// `out`, diagnostics to `err`.
///
/// Commands: classify, vertices, oracle, cross-check, table, enumerate.
/// Returns 0 on success, 1 on a domain error (bad input file, failed
/// cross-check), 2 on a usage error.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace qposet
