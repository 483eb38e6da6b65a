#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orbijet::cli {

// Runs the command-line front end. Exit codes: 0 = at least one
// criterion satisfied (or all checks passed), 1 = none satisfied (or a
// check failed), 2 = input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orbijet::cli
