#include "planar/recursion.hpp"

#include "planar/cohomology_ring.hpp"

#include <mutex>

namespace planar {

std::string CountKey::to_string() const {
  return std::to_string(d) + "," + std::to_string(r) + "," + std::to_string(s) + "," +
         std::to_string(theta);
}

MemoTable::MemoTable(const MemoTable& other) {
  std::shared_lock lock(other.mutex_);
  table_ = other.table_;
}

MemoTable& MemoTable::operator=(const MemoTable& other) {
  if (this == &other) return *this;
  std::map<CountKey, BigCount> copy;
  {
    std::shared_lock lock(other.mutex_);
    copy = other.table_;
  }
  std::unique_lock lock(mutex_);
  table_ = std::move(copy);
  return *this;
}

std::optional<BigCount> MemoTable::find(const CountKey& key) const {
  std::shared_lock lock(mutex_);
  auto it = table_.find(key);
  if (it == table_.end()) {
    ++misses_;
    return std::nullopt;
  }
  ++hits_;
  return it->second;
}

void MemoTable::insert(const CountKey& key, const BigCount& value) {
  std::unique_lock lock(mutex_);
  auto [it, inserted] = table_.try_emplace(key, value);
  if (!inserted && it->second != value) {
    throw IntegrityError("memo conflict at " + key.to_string() + ": stored " +
                         to_decimal(it->second) + ", new " + to_decimal(value));
  }
}

std::size_t MemoTable::size() const {
  std::shared_lock lock(mutex_);
  return table_.size();
}

void MemoTable::clear() {
  std::unique_lock lock(mutex_);
  table_.clear();
}

std::vector<std::pair<CountKey, BigCount>> MemoTable::entries() const {
  std::shared_lock lock(mutex_);
  return {table_.begin(), table_.end()};
}

BigCount degree_split(const CountKey& key, MemoTable& memo) {
  const int d = key.d, r = key.r, s = key.s, theta = key.theta;
  BigCount total = 2 * d * n_planar({d, r - 2, s + 1, theta}, memo);
  for (int r1 = 0; r1 <= r - 3; ++r1) {
    const BigCount c_r = binomial(r - 3, r1);
    for (int s1 = 0; s1 <= s; ++s1) {
      const BigCount weight = c_r * binomial(s, s1);
      for (int d1 = 1; d1 <= d - 1; ++d1) {
        const int d2 = d - d1, r2 = r - r1, s2 = s - s1;
        BigCount inner = d2 * b_term(d1, r1 + 1, s1, d2, r2 - 2, s2, theta, memo) -
                         d1 * b_term(d1, r1, s1, d2, r2 - 1, s2, theta, memo);
        if (inner == 0) continue;
        total += weight * (d1 * d1 * d2) * inner;
      }
    }
  }
  return total;
}

BigCount n_planar(const CountKey& key, MemoTable& memo) {
  if (key.has_negative() || !key.on_shell() || key.s > 3 || key.theta > 3) return 0;
  if (auto hit = memo.find(key)) return *hit;

  BigCount value;
  const auto r = static_cast<unsigned>(key.r), s = static_cast<unsigned>(key.s),
             theta = static_cast<unsigned>(key.theta);
  if (key.d == 1) {
    value = base_n1(r, s, theta);
  } else if (key.d == 2) {
    value = base_n2(r, s, theta);
  } else {
    value = degree_split(key, memo);
  }
  memo.insert(key, value);
  return value;
}

BigCount b_term(int d1, int r1, int s1, int d2, int r2, int s2, int theta, MemoTable& memo) {
  BigCount total = 0;
  for (int i = 0; i <= 3; ++i) {
    BigCount left = n_planar({d1, r1, s1, i}, memo);
    if (left == 0) continue;
    total += left * n_planar({d2, r2, s2, theta + 3 - i}, memo);
  }
  return total;
}

}  // namespace planar
