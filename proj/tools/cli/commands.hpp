#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ffsieve::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitUsage = 2,
  kExitInvalidConfig = 3,
  kExitBudget = 4,
  kExitIo = 5,
};

inline constexpr const char* kToolVersion = "0.1.0";

/// Parses args (without the program name), runs one subcommand and returns its exit code.
/// Reports go to `out` unless --out is given; failures print a JSON error object to `err`.
int cmd_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct SelftestResult {
  std::string name;
  bool ok;
  std::string detail;
};

/// The example suite: every worked example with a checkable value.
std::vector<SelftestResult> run_selftest();

}  // namespace ffsieve::cli
