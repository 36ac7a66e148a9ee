#pragma once

#include <string>
#include <vector>

namespace oracleforge::cli {

// Entry point behind the `oracleforge` binary. Exit codes are a stable
// contract: 0 success, 1 runtime failure, 2 usage or config error.
int run_cli(const std::vector<std::string>& args);

} // namespace oracleforge::cli
