#include "planar/verify.hpp"

#include "planar/cohomology_ring.hpp"
#include "planar/fixtures.hpp"
#include "planar/p2_oracle.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace planar {

namespace {

template <typename Table, typename Compute>
CheckResult check_base_table(std::string name, const Table& table, int dim, Compute compute) {
  CheckResult result{std::move(name), true, {}};
  std::ostringstream bad;
  int checked = 0;
  for (int r = 0; r <= 10; ++r) {
    for (int s = 0; s <= 10; ++s) {
      for (int theta = 0; theta <= 10; ++theta) {
        std::int64_t expected = 0;
        for (const auto& e : table)
          if (e.r == r && e.s == s && e.theta == theta) expected = e.value;
        const BigCount got = compute(r, s, theta);
        ++checked;
        if (got != expected) {
          result.passed = false;
          bad << " (" << r << "," << s << "," << theta << ")=" << to_decimal(got)
              << " want " << expected;
        }
      }
    }
  }
  result.detail = result.passed
                      ? std::to_string(checked) + " tuples, listed entries and zero sweep (dim " +
                            std::to_string(dim) + ")"
                      : "mismatches:" + bad.str();
  return result;
}

CheckResult check_line_only(int max_d, MemoTable& memo) {
  CheckResult result{"line-only planar counts", true, {}};
  std::ostringstream detail;
  for (const auto& e : fixtures::kLineOnlyCounts) {
    if (e.d > max_d) continue;
    const BigCount got = n_planar({e.d, e.r, e.s, 0}, memo);
    const bool ok = got == BigCount(static_cast<long>(e.value));
    result.passed = result.passed && ok;
    detail << " d=" << e.d << ":" << to_decimal(got) << (ok ? "" : " want " + std::to_string(e.value));
  }
  result.detail = detail.str();
  return result;
}

CheckResult check_oracle(int max_d, MemoTable& memo) {
  const int top = std::min(max_d, 8);
  const auto report = cross_check(top, memo);
  std::ostringstream detail;
  for (const auto& row : report.rows) {
    detail << " d=" << row.d << ":" << to_decimal(row.planar_value);
    if (!row.match) detail << " vs oracle " << to_decimal(row.oracle_value);
  }
  return {"plane-curve cross-check d<=" + std::to_string(top), report.passed(), detail.str()};
}

CheckResult check_nodal_identity(int max_d, MemoTable& memo) {
  CheckResult result{"nodal minus reducible identity", true, {}};
  std::ostringstream detail;
  for (const auto& e : fixtures::kNodalCounts) {
    if (e.d > max_d) continue;
    const BigCount difference = BigCount(static_cast<long>(e.nodal)) - static_cast<long>(e.reducible);
    const BigCount planar = n_planar({e.d, e.r, e.s, 0}, memo);
    const bool ok = planar == difference;
    result.passed = result.passed && ok;
    detail << " d=" << e.d << ":" << e.nodal << "-" << e.reducible << "=" << to_decimal(difference)
           << (ok ? "" : " but planar=" + to_decimal(planar));
  }
  result.detail = detail.str();
  return result;
}

CheckResult check_vanishing(int max_d, MemoTable& memo) {
  CheckResult result{"vanishing sweep", true, {}};
  std::ostringstream bad;
  int checked = 0;
  for (int d = 1; d <= max_d; ++d) {
    for (int r = 0; r <= 3 * d + 8; ++r) {
      for (int s = 0; s <= 5; ++s) {
        for (int theta = 0; theta <= 5; ++theta) {
          const CountKey key{d, r, s, theta};
          if (key.on_shell() && s <= 3 && theta <= 3) continue;
          ++checked;
          if (n_planar(key, memo) != 0) {
            result.passed = false;
            bad << " " << key.to_string();
          }
        }
      }
    }
  }
  result.detail = result.passed ? std::to_string(checked) + " vanishing keys" : "nonzero at" + bad.str();
  return result;
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

void VerifyReport::print(std::ostream& out) const {
  for (const auto& c : checks) {
    const auto start = c.detail.find_first_not_of(' ');
    out << (c.passed ? "PASS " : "FAIL ") << c.name << ':';
    if (start != std::string::npos) out << ' ' << c.detail.substr(start);
    out << '\n';
  }
  out << (passed() ? "ALL CHECKS PASSED" : "VERIFICATION FAILED") << '\n';
}

VerifyReport run_verification(int max_d, MemoTable& memo) {
  if (max_d < 2) throw std::invalid_argument("verification needs max_d >= 2");
  VerifyReport report;
  report.checks.push_back(check_base_table("line base table", fixtures::kLineTable, 5,
                                           [](int r, int s, int t) { return base_n1(r, s, t); }));
  report.checks.push_back(check_base_table("conic base table", fixtures::kConicTable, 8,
                                           [](int r, int s, int t) { return base_n2(r, s, t); }));
  report.checks.push_back(check_line_only(max_d, memo));
  report.checks.push_back(check_oracle(max_d, memo));
  report.checks.push_back(check_nodal_identity(max_d, memo));
  report.checks.push_back(check_vanishing(max_d, memo));
  return report;
}

}  // namespace planar
