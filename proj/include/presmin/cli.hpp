#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace presmin {

/// Exit codes shared by the library front end.
enum ExitCode : int {
  kExitPeriodic = 0,
  kExitDiffer = 1,
  kExitExpanding = 2,
  kExitInconclusive = 3,
  kExitUsage = 64,
  kExitHorizon = 65,
  kExitInference = 70,
};

/// Runs one command line (without the program name). Output is a pure
/// function of the arguments and PRESMIN_MAX_SEARCH.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace presmin
