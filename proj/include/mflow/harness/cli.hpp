#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace mflow::harness {

enum ExitCode : int { kFeasible = 0, kInfeasible = 1, kUsage = 2, kVerificationFailed = 3 };

// Runs one CLI invocation. `args` excludes the program name. The JSON report
// goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Key-sorted, two-space indented.
std::string emit_report(const nlohmann::json& report);

}  // namespace mflow::harness
