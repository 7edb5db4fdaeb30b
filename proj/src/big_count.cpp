#include "planar/big_count.hpp"

#include <algorithm>
#include <stdexcept>

namespace planar {

std::string to_decimal(const BigCount& value) { return value.get_str(10); }

BigCount parse_decimal(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(),
                   [](char c) { return c >= '0' && c <= '9'; })) {
    throw std::invalid_argument("not a decimal integer: '" + std::string(text) + "'");
  }
  return BigCount(std::string(text), 10);
}

BigCount binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial: n must be nonnegative");
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  // After step i the accumulator is C(n-k+i, i), so each division is exact.
  BigCount result = 1;
  for (long i = 1; i <= k; ++i) {
    result *= n - k + i;
    mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(),
                    static_cast<unsigned long>(i));
  }
  return result;
}

}  // namespace planar
