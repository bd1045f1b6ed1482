#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cremona {

/// Runs the command-line tool on `args` (without the program name). Documents
/// go to `out`, diagnostics to `err`; the return value is the exit status.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace cremona
