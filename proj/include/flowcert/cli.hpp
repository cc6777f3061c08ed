#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flowcert {

enum ExitCode : int {
  kExitOk = 0,
  kExitRefuted = 1,  // witness found, incompatible, or not connected
  kExitUsage = 2,
  kExitCapacity = 3,
};

/// Runs one CLI invocation. `args` excludes the program name. Data goes to
/// `out` (or --output), diagnostics and error JSON to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace flowcert
