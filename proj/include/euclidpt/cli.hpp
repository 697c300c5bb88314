#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace euclidpt {

// Exit codes: 0 success, 1 configuration error, 2 Dyson map undefined,
// 3 numerical failure. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace euclidpt
