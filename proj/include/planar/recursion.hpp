#pragma once

#include "planar/big_count.hpp"

#include <atomic>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace planar {

/// Index (d, r, s, theta) of one planar count: degree d curves meeting r
/// lines and s points, paired with a^theta on the dual P^3.
struct CountKey {
  int d = 1;
  int r = 0;
  int s = 0;
  int theta = 0;

  /// r + 2s + theta matches the dimension 3d + 2 of the moduli space.
  bool on_shell() const { return r + 2 * s + theta == 3 * d + 2; }
  bool has_negative() const { return d < 1 || r < 0 || s < 0 || theta < 0; }

  /// "d,r,s,theta"
  std::string to_string() const;

  friend auto operator<=>(const CountKey&, const CountKey&) = default;
};

/// Raised when the memo is asked to hold two different values for one key.
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thread-safe idempotent cache CountKey -> BigCount, ordered by key.
class MemoTable {
 public:
  MemoTable() = default;
  MemoTable(const MemoTable& other);
  MemoTable& operator=(const MemoTable& other);

  std::optional<BigCount> find(const CountKey& key) const;

  /// No-op if the key already holds `value`; IntegrityError if it holds
  /// something else.
  void insert(const CountKey& key, const BigCount& value);

  std::size_t size() const;
  void clear();

  /// Sorted copy of all entries.
  std::vector<std::pair<CountKey, BigCount>> entries() const;

  std::uint64_t hits() const { return hits_.load(); }
  std::uint64_t misses() const { return misses_.load(); }

 private:
  mutable std::shared_mutex mutex_;
  std::map<CountKey, BigCount> table_;
  mutable std::atomic<std::uint64_t> hits_{0};
  mutable std::atomic<std::uint64_t> misses_{0};
};

/// Planar count N_d(r, s, theta). Total on all integer inputs: keys that are
/// off-shell, have s > 3 or theta > 3, or carry a negative coordinate are 0.
/// Degrees 1 and 2 come from the cohomology rings, higher degrees from the
/// degree-splitting recursion.
BigCount n_planar(const CountKey& key, MemoTable& memo);

/// Right-hand side of the degree-splitting recursion for an on-shell key
/// with d >= 2: the r-2, s+1 term plus the weighted two-component sum.
/// n_planar uses it for d >= 3. The derivation needs r >= 3.
BigCount degree_split(const CountKey& key, MemoTable& memo);

/// Two-component term: sum over i = 0..3 of
///   N_{d1}(r1, s1, i) * N_{d2}(r2, s2, theta + 3 - i).
BigCount b_term(int d1, int r1, int s1, int d2, int r2, int s2, int theta, MemoTable& memo);

}  // namespace planar
