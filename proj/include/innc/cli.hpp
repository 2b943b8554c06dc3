#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace innc {

/// Runs the command line `args` (args[0] is the program name). Reports go to
/// `out` (or the --out file), diagnostics to `err`. Returns the exit code:
/// 0 success, 1 input error, 2 internal inconsistency.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace innc
