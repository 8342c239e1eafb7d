#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rnnen {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (args[0] is the program name). Results go to `out`,
/// diagnostics to `err`.
///
/// Subcommands: simulate, linearize, synthesize, export-netlist, stability,
/// verify. `--spec canonical` selects the built-in two-neuron system when no
/// file of that name exists.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rnnen
