#ifndef MORITA_CLI_HPP_
#define MORITA_CLI_HPP_

#include <iosfwd>

namespace morita {

/// Exit code for malformed input, unknown names and exhausted budgets.
inline constexpr int kInputErrorExit = 4;

/// Parses the command line, runs one command and writes the table to `out`.
/// Returns the process exit code.
int run_cli(int argc, char const* const* argv, std::ostream& out, std::ostream& err);

}  // namespace morita

#endif  // MORITA_CLI_HPP_
