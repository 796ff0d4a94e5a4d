#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace planeforge {

// Full command-line front end. Exit codes: 0 success or witnesses found,
// 1 negative verdict or exhausted with none, 2 usage/format error,
// 3 search guard hit before exhaustion.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace planeforge
