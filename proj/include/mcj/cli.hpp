#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mcj {

// Exit codes: 0 all checks pass, 1 a tolerance check failed, 2 usage or parameter error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args);

}  // namespace mcj
