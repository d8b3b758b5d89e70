#pragma once

#include <ostream>

namespace cirldp {

enum ExitCode : int {
  kExitPass = 0,
  kExitCheckFailed = 1,
  kExitUsage = 2,
  kExitNumeric = 3,
};

/// Entry point of the `cir_ldp` tool. Results go to `out` (or files under
/// --out); failures are reported as one JSON object on `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cirldp
