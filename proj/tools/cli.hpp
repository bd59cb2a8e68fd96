#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ribbonfusion::cli {

// Runs one CLI request. Exit codes: 0 success, 1 failed limit check,
// 2 usage error, 3 domain precondition error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ribbonfusion::cli
