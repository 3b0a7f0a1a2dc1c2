#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "vtot/report.hpp"

namespace vtot::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_verification_failed = 1;
inline constexpr int exit_usage = 2;

/// exit_ok iff the report has no violations.
int exit_code_for(const verification_report& report);

/// Runs the command line `args` (program name first). Data goes to `out`,
/// diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vtot::cli
