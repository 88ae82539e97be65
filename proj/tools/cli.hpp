#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace teamlogic::cli {

/// Runs one command line (without the program name). Returns the exit code:
/// 0 for true / equivalent / all claims pass, 1 for the negative verdict,
/// 2 for usage, parse and limit errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace teamlogic::cli
