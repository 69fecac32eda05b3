#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace extbar {

// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 internal assertion.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace extbar
