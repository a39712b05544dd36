#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace blrc::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kValidation = 2,
    kGuard = 3,
    kIo = 4,
    kRepair = 5,
};

/// Runs the command line front end. `args` excludes the program name.
/// Normal output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace blrc::cli
