#ifndef GEMCOLOR_TOOLS_CLI_HPP
#define GEMCOLOR_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace gemcolor::cli {

/// Stable exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kNegative = 1,       // non-member, bound violation, failed criterion
  kInputError = 2,     // unreadable or malformed input, bad flags, guardrails
  kCertification = 3,  // a coloring failed its own verification
};

/// Runs one command line (args excludes the program name). Reports go to
/// `out` as JSON, or as text with --human; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string version();

}  // namespace gemcolor::cli

#endif  // GEMCOLOR_TOOLS_CLI_HPP
