#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace morphdet::cli {

/// Runs the command line; returns the process exit code
/// (0 ok, 1 malformed input, 2 failed precondition, 3 internal error).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace morphdet::cli
