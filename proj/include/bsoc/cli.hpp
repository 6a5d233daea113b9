#ifndef BSOC_CLI_HPP
#define BSOC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace bsoc {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitConfig = 1, kExitMath = 2, kExitPrecision = 3 };

/// Runs the command line `args` (without the program name). Reports go to
/// `out` (or the --out file), diagnostics to `err`.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace bsoc

#endif
