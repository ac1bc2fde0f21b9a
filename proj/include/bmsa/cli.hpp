#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bmsa {

// Command-line front end; returns the process exit code.
// 0 = success, 1 = configuration or input error, 2 = decode failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bmsa
