#pragma once

#include <iosfwd>  // for ostream
#include <string>  // for string
#include <vector>  // for vector

namespace sgp::cli {

  enum ExitCode : int { success = 0, failure = 1, usage_error = 2 };

  // Runs `sgp` with argv-style arguments (args[0] is the program name) and
  // returns the exit code. Results go to out, usage and parse errors to err.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace sgp::cli
