#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qdiamond::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_usage = 2;

/// Runs one command line (args excludes the program name). Returns 0 on
/// success, 1 when a verification fails and 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qdiamond::cli
