#pragma once

#include <string>
#include <vector>

namespace intdec {

struct CliResult {
  int exit_code = 0;  // 0 analysis done, 2 input/config error, 3 budget error
  std::string out;
  std::string err;
};

/// The whole CLI as a function, so tests can drive it in-process and golden
/// files stay byte-comparable.
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace intdec
