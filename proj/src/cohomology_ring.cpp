#include "planar/cohomology_ring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace planar {

namespace {

constexpr int kACols = kBaseTop + 1;

// Dense grid over lambda^0..lambda^{rows-1}, a^0..a^3, no fiber relation applied.
struct FreeGrid {
  explicit FreeGrid(int rows) : rows(rows), cells(static_cast<std::size_t>(rows) * kACols) {}
  BigCount& at(int i, int j) { return cells[static_cast<std::size_t>(i) * kACols + j]; }
  int rows;
  std::vector<BigCount> cells;
};

// Eliminates lambda^k for k >= m from the top down. Each rewrite raises the
// a-degree, so anything pushed past a^3 is dropped on the spot.
RingElement reduce_grid(FreeGrid& grid, const RingSpec& spec) {
  const int m = spec.fiber_degree;
  for (int k = grid.rows - 1; k >= m; --k) {
    for (int j = 0; j < kACols; ++j) {
      BigCount c = grid.at(k, j);
      if (c == 0) continue;
      grid.at(k, j) = 0;
      for (int t = 1; t <= m && j + t <= kBaseTop; ++t) {
        grid.at(k - t, j + t) -= spec.relation[t - 1] * c;
      }
    }
  }
  RingElement out(m);
  for (int i = 0; i < std::min(m, grid.rows); ++i)
    for (int j = 0; j < kACols; ++j) out.coeff(i, j) = grid.at(i, j);
  return out;
}

void require_same_ring(const RingElement& x, const RingSpec& spec) {
  if (x.fiber_degree() != spec.fiber_degree)
    throw std::invalid_argument("ring element does not belong to this ring");
}

RingSpec make_spec(int m, std::vector<BigCount> relation, int line_a_coeff) {
  RingSpec spec;
  spec.fiber_degree = m;
  spec.relation = std::move(relation);
  spec.relation.resize(static_cast<std::size_t>(m), 0);
  spec.line_cycle = RingElement(m);
  spec.line_cycle.coeff(1, 0) = 1;
  spec.line_cycle.coeff(0, 1) = line_a_coeff;
  spec.point_cycle = RingElement(m);
  spec.point_cycle.coeff(1, 1) = 1;
  return spec;
}

BigCount base_count(const RingSpec& ring, unsigned r, unsigned s, unsigned theta) {
  RingElement x = ring_pow(ring.line_cycle, r, ring);
  x = ring_mul(x, ring_pow(ring.point_cycle, s, ring), ring);
  x = ring_mul(x, ring_pow(ring.a(), theta, ring), ring);
  return top_coefficient(x, ring);
}

}  // namespace

RingElement::RingElement(int fiber_degree)
    : fiber_degree_(fiber_degree),
      coeffs_(static_cast<std::size_t>(fiber_degree) * kACols) {
  if (fiber_degree < 1) throw std::invalid_argument("fiber degree must be positive");
}

const BigCount& RingElement::coeff(int lambda_pow, int a_pow) const {
  return coeffs_.at(static_cast<std::size_t>(lambda_pow) * kACols + a_pow);
}

BigCount& RingElement::coeff(int lambda_pow, int a_pow) {
  if (lambda_pow < 0 || lambda_pow >= fiber_degree_ || a_pow < 0 || a_pow > kBaseTop)
    throw std::out_of_range("monomial outside the reduced range");
  return coeffs_[static_cast<std::size_t>(lambda_pow) * kACols + a_pow];
}

bool RingElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigCount& c) { return c == 0; });
}

RingElement& RingElement::operator+=(const RingElement& other) {
  if (other.fiber_degree_ != fiber_degree_) throw std::invalid_argument("ring mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& other) {
  if (other.fiber_degree_ != fiber_degree_) throw std::invalid_argument("ring mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

RingElement operator*(const BigCount& c, RingElement x) {
  for (auto& v : x.coeffs_) v *= c;
  return x;
}

std::string RingElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = fiber_degree_ - 1; i >= 0; --i) {
    for (int j = 0; j < kACols; ++j) {
      BigCount c = coeff(i, j);
      if (c == 0) continue;
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      BigCount mag = abs(c);
      bool has_var = i > 0 || j > 0;
      if (mag != 1 || !has_var) os << mag.get_str() << (has_var ? " " : "");
      if (i > 0) os << "λ" << (i > 1 ? "^" + std::to_string(i) : "");
      if (i > 0 && j > 0) os << " ";
      if (j > 0) os << "a" << (j > 1 ? "^" + std::to_string(j) : "");
      first = false;
    }
  }
  return first ? "0" : os.str();
}

RingElement RingSpec::one() const {
  RingElement e(fiber_degree);
  e.coeff(0, 0) = 1;
  return e;
}

RingElement RingSpec::lambda() const { return from_terms({{1, 0, 1}}); }

RingElement RingSpec::a() const {
  RingElement e(fiber_degree);
  e.coeff(0, 1) = 1;
  return e;
}

RingElement RingSpec::from_terms(const std::vector<Term>& terms) const {
  int rows = fiber_degree;
  for (const auto& t : terms) {
    if (t.lambda_pow < 0 || t.a_pow < 0) throw std::invalid_argument("negative exponent");
    rows = std::max(rows, t.lambda_pow + 1);
  }
  FreeGrid grid(rows);
  for (const auto& t : terms)
    if (t.a_pow <= kBaseTop) grid.at(t.lambda_pow, t.a_pow) += t.coeff;
  return reduce_grid(grid, *this);
}

RingElement ring_mul(const RingElement& x, const RingElement& y, const RingSpec& spec) {
  require_same_ring(x, spec);
  require_same_ring(y, spec);
  const int m = spec.fiber_degree;
  FreeGrid grid(2 * m - 1);
  for (int i1 = 0; i1 < m; ++i1) {
    for (int j1 = 0; j1 < kACols; ++j1) {
      const BigCount& c1 = x.coeff(i1, j1);
      if (c1 == 0) continue;
      for (int i2 = 0; i2 < m; ++i2) {
        for (int j2 = 0; j1 + j2 < kACols; ++j2) {
          const BigCount& c2 = y.coeff(i2, j2);
          if (c2 != 0) grid.at(i1 + i2, j1 + j2) += c1 * c2;
        }
      }
    }
  }
  return reduce_grid(grid, spec);
}

RingElement ring_pow(const RingElement& x, unsigned n, const RingSpec& spec) {
  require_same_ring(x, spec);
  RingElement result = spec.one();
  RingElement base = x;
  while (n > 0) {
    if (n & 1u) result = ring_mul(result, base, spec);
    n >>= 1u;
    if (n > 0) base = ring_mul(base, base, spec);
  }
  return result;
}

RingElement reduce(const RingElement& x, const RingSpec& spec) {
  require_same_ring(x, spec);
  FreeGrid grid(spec.fiber_degree);
  for (int i = 0; i < spec.fiber_degree; ++i)
    for (int j = 0; j < kACols; ++j) grid.at(i, j) = x.coeff(i, j);
  return reduce_grid(grid, spec);
}

BigCount top_coefficient(const RingElement& x, const RingSpec& spec) {
  require_same_ring(x, spec);
  return x.coeff(spec.fiber_degree - 1, kBaseTop);
}

const RingSpec& line_ring() {
  static const RingSpec spec = make_spec(3, {1, 1, 1}, 1);
  return spec;
}

const RingSpec& conic_ring() {
  static const RingSpec spec = make_spec(6, {4, 10, 20}, 2);
  return spec;
}

BigCount base_n1(unsigned r, unsigned s, unsigned theta) {
  return base_count(line_ring(), r, s, theta);
}

BigCount base_n2(unsigned r, unsigned s, unsigned theta) {
  return base_count(conic_ring(), r, s, theta);
}

}  // namespace planar
