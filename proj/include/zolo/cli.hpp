#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zolo {

/// Exit codes: 0 success, 2 invalid input, 3 internal violation or a census
/// disagreement. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zolo
