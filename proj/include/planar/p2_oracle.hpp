#pragma once

#include "planar/big_count.hpp"
#include "planar/recursion.hpp"

#include <vector>

namespace planar {

/// Memo for the plane-curve recursion. Kept apart from MemoTable so the
/// oracle shares nothing with the planar engine except binomial().
class P2Memo {
 public:
  const BigCount* find(int d) const;
  void insert(int d, const BigCount& value);
  std::size_t size() const { return values_.size(); }

 private:
  std::vector<BigCount> values_;  // values_[d-1], filled in ascending order
};

/// Number of rational degree-d curves in P^2 through 3d-1 general points
/// (1, 1, 12, 620, ...). Throws std::invalid_argument for d < 1.
BigCount kontsevich_p2(int d, P2Memo& memo);
BigCount kontsevich_p2(int d);

/// Same recursion evaluated without any cache (exponential; for testing).
BigCount kontsevich_p2_uncached(int d);

struct CrossCheckRow {
  int d = 0;
  BigCount planar_value;
  BigCount oracle_value;
  bool match = false;
};

struct CrossCheckReport {
  std::vector<CrossCheckRow> rows;
  bool passed() const;
};

/// Compares N_d(3d-4, 3, 0) with the plane count for 2 <= d <= d_max: three
/// points fix the plane, leaving a plane-curve problem through 3d-1 points.
CrossCheckReport cross_check(int d_max, MemoTable& memo);

}  // namespace planar
