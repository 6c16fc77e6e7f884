#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ntv {

enum ExitStatus : int {
  kExitOk = 0,
  kExitCheckFailed = 1,  // SkipViolation, VerificationFailure, WitnessFailure, invalid certificate
  kExitUsage = 2,        // bad flags, malformed input, resource caps, exhausted search bounds
};

/// Parses `args` (without the program name), runs the subcommand, and writes
/// the report to `out` and diagnostics to `err`. Machine-readable output is
/// byte-identical across runs with the same arguments and environment.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ntv
