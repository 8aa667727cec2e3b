#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pmonoid::cli {

/// Exit codes: 0 success, 1 unreadable input (bad JSON, schema mismatch or
/// bad arguments), 2 domain error such as a non-convergent family or a
/// sequence outside M_H, 3 when verify-examples reports a failure.
enum ExitCode : int { kOk = 0, kParseError = 1, kDomainError = 2, kExamplesFailed = 3 };

/// Runs one command line (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pmonoid::cli
