#pragma once

// Command-line front end. `run_cli` never throws: errors become messages on
// `err` and an exit code.

#include <iosfwd>
#include <string>
#include <vector>

namespace graphcode {

enum ExitCode : int {
  exit_ok = 0,
  exit_usage = 1,
  exit_size_cap = 2,
  exit_internal = 3,
};

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Fixed-point with `precision` decimals; an exact zero prints as "0".
std::string format_probability(double value, int precision);

}  // namespace graphcode
