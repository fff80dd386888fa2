#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace zdx::cli {

/// Entry point shared by the binary and the integration tests. Exit codes:
/// 0 success, 1 verification failure, 2 usage or window error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string version();

}  // namespace zdx::cli
