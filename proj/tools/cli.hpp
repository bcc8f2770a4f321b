#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace powval::cli {

/// Runs the command line with args[0] as the program name. Exit status:
/// 0 success, 2 invalid input, 3 budget exhausted.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace powval::cli
