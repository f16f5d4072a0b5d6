#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace eccaudit {

/// Runs the command line tool. args excludes the program name.
/// Returns 0 on success, 1 when --fail-on-violation finds a violated bound,
/// 2 on usage or input errors.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eccaudit
