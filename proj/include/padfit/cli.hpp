#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace padfit::cli {

enum ExitCode : int {
    kSuccess = 0,
    kInvalid = 1,
    kUsage = 2,
};

// Runs one `padfit` command. `args` excludes the program name. Reports go to
// `out`, diagnostics to `err`. Returns 0, 1 or 2.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace padfit::cli
