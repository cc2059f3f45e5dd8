#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hypasym {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitParse = 2,
  kExitPrecisionCeiling = 3,
  kExitRegimeMismatch = 4,
  kExitIdentityFail = 5,
  kExitQuadrature = 6,
};

/// Inclusive range lo:hi:step with lo >= 0 and step >= 1.
struct NRange {
  long lo = 0;
  long hi = 0;
  long step = 1;

  static NRange parse(const std::string& text);
  std::vector<long> values() const;
};

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`; returns the process exit code.
int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hypasym
