#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orbi {

// Exit codes: 0 all checks pass, 1 input or usage error, 2 a verification
// reported failure, 3 budget exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orbi
