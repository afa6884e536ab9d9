#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace chowsym {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

struct VerifyOptions {
  int up_to = 4;
  /// Exhaustive per-orbit and per-pair suites run for n <= min(up_to, this).
  int exhaustive_limit = 4;
  /// Count checks against the involution recurrence run for 2n <= this.
  int count_limit = 16;
};

// Individual suites; m is the ambient size 2n.
CheckResult check_enumeration_counts(int max_m);
CheckResult check_codimension_oracle(int m);
CheckResult check_closure_order(int m);
CheckResult check_fibrations(int m);
CheckResult check_double_cover(int m);
CheckResult check_chow_group(int n);

/// Runs every suite and streams one line per check to `log` when given.
VerificationReport run_verification(const VerifyOptions& options, std::ostream* log = nullptr);

}  // namespace chowsym
