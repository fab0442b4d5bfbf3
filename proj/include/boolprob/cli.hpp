#ifndef BOOLPROB_CLI_HPP
#define BOOLPROB_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace boolprob {

// Runs one CLI invocation (args excludes the program name) and writes the
// result to `out` (or the --output path) and diagnostics to `err`.
// Exit codes: 0 success / all satisfied, 1 at least one violation,
// 2 input or usage error, 3 numerical failure.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace boolprob

#endif
