#pragma once

// The nc-dedekind command line, as a library so tests can drive it
// without spawning processes.

#include <iosfwd>
#include <string>
#include <vector>

namespace ncdedekind::cli {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kFailure = 2;
inline constexpr int kNotConverged = 3;
inline constexpr int kUsage = 64;
inline constexpr int kDomain = 65;
}  // namespace exit_code

/// Runs one invocation; args excludes the program name. JSON goes to out
/// (or to the --json file, with a one-line summary on out), diagnostics
/// to err. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ncdedekind::cli
