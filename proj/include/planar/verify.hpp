#pragma once

#include "planar/recursion.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace planar {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool passed() const;
  void print(std::ostream& out) const;
};

/// Runs, in order: base tables against the published values, line-only
/// planar counts, the plane-curve cross-check up to min(max_d, 8), the
/// nodal-minus-reducible identity, and vanishing sweeps. Requires max_d >= 2.
VerifyReport run_verification(int max_d, MemoTable& memo);

}  // namespace planar
