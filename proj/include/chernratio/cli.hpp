#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chernratio {

/// Runs the command line (args excludes the program name). Exit codes:
/// 0 success, 1 invalid input, 2 computed fine but unbounded (polytope) or
/// mismatched (verify-paper).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chernratio
