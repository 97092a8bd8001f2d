#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pmalg {

// Runs one CLI invocation; args excludes the program name.  Writes results
// to out and diagnostics to err.  Returns the process exit code:
//   0  success
//   1  domain failure: invalid algebra, violated expectation (--expect),
//      oracle mismatch, cap exceeded, unreadable file
//   2  usage error: unknown flags/subcommand, malformed identity string
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pmalg
