#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mwbs {

// Exit codes: 0 success, 1 infeasible input or failed validation, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mwbs
