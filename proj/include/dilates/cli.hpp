#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace dilates::cli {

enum ExitCode : int {
  success = 0,
  inequality_failed = 1,
  usage_error = 2,
  range_error = 3,
};

/// Runs one command line. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "0,1,3"-style lists. Malformed tokens raise InvalidArgument,
/// values outside 64 bits raise RangeError.
std::vector<std::int64_t> parse_int_list(const std::string& text);

}  // namespace dilates::cli
