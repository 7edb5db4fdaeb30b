#include "planar/p2_oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace planar {

namespace {

template <typename Lookup>
BigCount kontsevich_step(int d, Lookup&& lookup) {
  if (d == 1) return 1;
  BigCount total = 0;
  const long n = 3L * d - 4;
  for (int d1 = 1; d1 <= d - 1; ++d1) {
    const int d2 = d - d1;
    BigCount bracket = d2 * binomial(n, 3L * d1 - 2) - d1 * binomial(n, 3L * d1 - 1);
    total += lookup(d1) * lookup(d2) * (d1 * d1 * d2) * bracket;
  }
  return total;
}

void require_degree(int d) {
  if (d < 1) throw std::invalid_argument("degree must be at least 1, got " + std::to_string(d));
}

}  // namespace

const BigCount* P2Memo::find(int d) const {
  if (d < 1 || static_cast<std::size_t>(d) > values_.size()) return nullptr;
  return &values_[static_cast<std::size_t>(d) - 1];
}

void P2Memo::insert(int d, const BigCount& value) {
  if (const BigCount* existing = find(d)) {
    if (*existing != value) throw IntegrityError("plane-curve memo conflict at d=" + std::to_string(d));
    return;
  }
  if (static_cast<std::size_t>(d) != values_.size() + 1)
    throw std::logic_error("plane-curve memo must be filled in ascending degree");
  values_.push_back(value);
}

BigCount kontsevich_p2(int d, P2Memo& memo) {
  require_degree(d);
  for (int k = static_cast<int>(memo.size()) + 1; k <= d; ++k) {
    memo.insert(k, kontsevich_step(k, [&](int j) { return *memo.find(j); }));
  }
  return *memo.find(d);
}

BigCount kontsevich_p2(int d) {
  P2Memo memo;
  return kontsevich_p2(d, memo);
}

BigCount kontsevich_p2_uncached(int d) {
  require_degree(d);
  return kontsevich_step(d, [](int j) { return kontsevich_p2_uncached(j); });
}

bool CrossCheckReport::passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const CrossCheckRow& row) { return row.match; });
}

CrossCheckReport cross_check(int d_max, MemoTable& memo) {
  if (d_max < 2) throw std::invalid_argument("cross_check needs d_max >= 2");
  CrossCheckReport report;
  P2Memo oracle_memo;
  for (int d = 2; d <= d_max; ++d) {
    CrossCheckRow row;
    row.d = d;
    row.planar_value = n_planar({d, 3 * d - 4, 3, 0}, memo);
    row.oracle_value = kontsevich_p2(d, oracle_memo);
    row.match = row.planar_value == row.oracle_value;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace planar
