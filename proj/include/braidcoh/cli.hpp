#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace braidcoh {

enum ExitCode : int { kExitPass = 0, kExitCheckFailed = 1, kExitUsage = 2 };

// Runs one `braidcoh` command; args excludes the program name. Reports go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace braidcoh
