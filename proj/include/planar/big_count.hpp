#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace planar {

/// Arbitrary-precision signed integer used for every count.
using BigCount = mpz_class;

/// Plain decimal rendering: optional leading '-', no exponent, no padding.
std::string to_decimal(const BigCount& value);

/// Inverse of to_decimal. Throws std::invalid_argument on anything that is
/// not `-?[0-9]+` (no '+', no whitespace, no exponent).
BigCount parse_decimal(std::string_view text);

/// Exact C(n, k). Total in k: returns 0 for k < 0 or k > n.
/// Requires n >= 0.
BigCount binomial(long n, long k);

}  // namespace planar
