#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace knotcalc {

// Runs one command (args excludes the program name); results go to `out`,
// diagnostics and warnings to `err`.  Returns the process exit code:
// 0 success, 2 parse error, 3 domain-invariant violation.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace knotcalc
