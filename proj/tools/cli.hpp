#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace compmat::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kDomain = 3, kInvariant = 4 };

/// Runs one command line (without the program name). Reports go to out,
/// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace compmat::cli
