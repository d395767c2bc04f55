#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace masschain {

// Exit codes: 0 success, 2 config error, 3 instability, 4 bound hypotheses
// unmet, 5 numerical failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace masschain
