#ifndef TCONV_CLI_HPP
#define TCONV_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace tconv::cli {

/// Exit codes reported by run().
inline constexpr int kExitSuccess = 0;
inline constexpr int kExitCheckFailure = 1;
inline constexpr int kExitUsageError = 2;

/// Dispatches one CLI invocation.  `args` excludes the program name.
/// Returns the process exit code: 0 on success, 1 when a requested check
/// fails, 2 on usage or domain errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tconv::cli

#endif  // TCONV_CLI_HPP
