#pragma once

#include <string>
#include <vector>

namespace sylow {

struct CliResult {
  /// 0 success, 1 verification failure, 2 usage error.
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Runs one sylowctl invocation; args exclude the program name.
CliResult run_cli(const std::vector<std::string>& args);

} // namespace sylow
