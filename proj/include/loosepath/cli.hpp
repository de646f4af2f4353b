#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace loosepath {

/// Exit codes: 0 success or pass, 1 property failure, 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv);

}  // namespace loosepath
