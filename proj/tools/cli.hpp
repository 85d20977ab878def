#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace canalis::cli
{

/// Stable process exit codes.
enum exit_code : int
{
  ok = 0,
  usage = 2,
  range = 3,
  starvation = 4,
  mismatch = 5
};

/// Runs the command line `args` (args[0] is the program name) writing results
/// to `out` and diagnostics to `err`; returns the exit code.
int run( const std::vector<std::string>& args, std::ostream& out, std::ostream& err );

} // namespace canalis::cli
