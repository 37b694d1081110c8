#pragma once

#include <string>
#include <vector>

namespace sosinv {

// Exit codes: 0 success, 2 parse/validation error, 3 no conclusive result,
// 4 I/O error, 1 unexpected internal error.
int run_cli(const std::vector<std::string>& args);

}  // namespace sosinv
