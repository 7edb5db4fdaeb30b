#pragma once

#include "planar/big_count.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace planar {

/// Highest surviving power of the base class `a` (the base is the dual P^3).
inline constexpr int kBaseTop = 3;

struct RingSpec;

/// Reduced class sum c_ij lambda^i a^j with 0 <= i < fiber_degree, 0 <= j <= 3.
/// Stored as a dense (fiber_degree x 4) grid; the zero element is all zeros.
class RingElement {
 public:
  RingElement() = default;
  explicit RingElement(int fiber_degree);

  int fiber_degree() const { return fiber_degree_; }

  const BigCount& coeff(int lambda_pow, int a_pow) const;
  BigCount& coeff(int lambda_pow, int a_pow);

  bool is_zero() const;

  RingElement& operator+=(const RingElement& other);
  RingElement& operator-=(const RingElement& other);
  friend RingElement operator+(RingElement x, const RingElement& y) { return x += y; }
  friend RingElement operator-(RingElement x, const RingElement& y) { return x -= y; }
  friend RingElement operator*(const BigCount& c, RingElement x);

  friend bool operator==(const RingElement& x, const RingElement& y) = default;

  /// Debug rendering, e.g. "2 λ^2 a^2 - λ a^3"; "0" for the zero element.
  std::string to_string() const;

 private:
  int fiber_degree_ = 0;
  std::vector<BigCount> coeffs_;  // row-major by lambda power, 4 per row
};

/// One monomial with an arbitrary lambda exponent, before reduction.
struct Term {
  int lambda_pow = 0;
  int a_pow = 0;
  BigCount coeff;
};

/// Truncated quotient Z[lambda, a] / (fiber relation, a^4).
///
/// The fiber relation reads
///   lambda^m = -(c_1 lambda^{m-1} a + c_2 lambda^{m-2} a^2 + ... + c_m a^m)
/// where m = fiber_degree and relation = {c_1, ..., c_m}. Slots past a^3 are
/// kept for shape only; they always multiply a vanishing power of a.
struct RingSpec {
  int fiber_degree = 0;
  std::vector<BigCount> relation;
  RingElement line_cycle;
  RingElement point_cycle;

  RingElement one() const;
  RingElement lambda() const;
  RingElement a() const;

  /// Sum of arbitrary terms, reduced to normal form.
  RingElement from_terms(const std::vector<Term>& terms) const;
};

/// Fiber P^2 over the dual P^3 (planar lines):
/// lambda^3 + lambda^2 a + lambda a^2 + a^3 = 0, line = lambda + a, point = lambda a.
const RingSpec& line_ring();

/// Fiber P^5 over the dual P^3 (planar conics):
/// lambda^6 + 4 lambda^5 a + 10 lambda^4 a^2 + 20 lambda^3 a^3 = 0,
/// line = lambda + 2a, point = lambda a.
const RingSpec& conic_ring();

RingElement ring_mul(const RingElement& x, const RingElement& y, const RingSpec& spec);
RingElement ring_pow(const RingElement& x, unsigned n, const RingSpec& spec);

/// Re-runs normal-form reduction on an element that is already reduced.
RingElement reduce(const RingElement& x, const RingSpec& spec);

/// Coefficient of lambda^{m-1} a^3, i.e. the degree of the top class.
BigCount top_coefficient(const RingElement& x, const RingSpec& spec);

/// Intersection number of line^r point^s a^theta in the line ring.
BigCount base_n1(unsigned r, unsigned s, unsigned theta);

/// Intersection number of line^r point^s a^theta in the conic ring.
BigCount base_n2(unsigned r, unsigned s, unsigned theta);

}  // namespace planar
