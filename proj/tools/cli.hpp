#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ybfk::cli {

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kBadInput = 2 };

/// Runs one invocation. `args` excludes the program name. The JSON report goes
/// to `out` (or --out), the human summary and usage text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ybfk::cli
