#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ropen::cli {

/// Runs one command line (without the program name). Reports go to `out`
/// as canonical JSON, diagnostics to `err`.
/// Exit codes: 0 success, 1 negative verdict, 2 malformed input.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ropen::cli
