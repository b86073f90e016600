#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace softdm {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitInput = 2,
  kExitMismatch = 3,
};

// Entry point behind the `softdm` executable. `args` excludes the program
// name. Reports go to `out` (or --output); diagnostics go to `err`.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace softdm
