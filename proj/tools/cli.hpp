#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace poisson_ore::cli {

/// Exit codes: 0 success, 1 mathematical negative, 2 usage or parse error,
/// 3 internal error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace poisson_ore::cli
