#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace realcipher::cli {

/// Runs the command line `args` (args[0] is the program name). Returns the
/// process exit status; diagnostics go to `err`, reports to `out`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace realcipher::cli
