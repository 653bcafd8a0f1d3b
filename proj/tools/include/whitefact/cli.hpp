#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace whitefact {

// Exit codes: 0 success, 1 domain error, 2 parse or usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace whitefact
