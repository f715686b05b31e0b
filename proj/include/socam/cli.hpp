#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace socam::cli
{

inline constexpr int exit_ok = 0;
inline constexpr int exit_invalid = 2;
inline constexpr int exit_infeasible = 3;

/// Runs the command line (args excludes the program name). Output goes to out
/// unless --out names a file; diagnostics go to err. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace socam::cli
