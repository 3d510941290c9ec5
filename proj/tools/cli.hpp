#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace oscsum::cli {

/// Exit codes: 0 all checks passed, 1 a check failed or a computation did
/// not converge, 2 bad usage or arguments outside a domain.
enum ExitCode : int { kPass = 0, kCheckFailed = 1, kUsage = 2 };

/// Parses `args` (without the program name), runs one subcommand and
/// writes its report to `out` unless --out names a file. Diagnostics go to
/// `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace oscsum::cli
