#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace caliber {

// Runs the command line (arguments without the program name). Returns 0 on success,
// 1 when a verification suite fails and 2 on usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace caliber
