#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace snc {

/// Exit statuses of sn-calc.
enum ExitCode : int { kOk = 0, kUsage = 1, kParse = 2, kDomain = 3, kVerification = 4 };

/// Runs sn-calc on `args` (program name excluded), writing results to `out`
/// and diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace snc
