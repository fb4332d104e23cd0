#include "trimoduli/lattice.hpp"

#include "trimoduli/error.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace trimoduli {

namespace {

struct U256 {
  UWide hi;
  UWide lo;
};

auto mul_wide(UWide a, UWide b) -> U256 {
  constexpr UWide mask = ~std::uint64_t{0};
  const UWide a0 = a & mask, a1 = a >> 64;
  const UWide b0 = b & mask, b1 = b >> 64;
  const UWide p00 = a0 * b0;
  const UWide p01 = a0 * b1;
  const UWide p10 = a1 * b0;
  const UWide p11 = a1 * b1;
  const UWide middle = (p00 >> 64) + (p01 & mask) + (p10 & mask);
  return {p11 + (p01 >> 64) + (p10 >> 64) + (middle >> 64), (middle << 64) | (p00 & mask)};
}

auto sorted(UWide s0, UWide s1, UWide s2) -> std::array<UWide, 3> {
  std::array<UWide, 3> s{s0, s1, s2};
  std::sort(s.begin(), s.end());
  return s;
}

void validate_sorted(const std::array<UWide, 3> &s) {
  const auto [p, q, r] = s;
  if (p == 0) throw GuardError("squared sides: zero-length side");
  if (r > kMaxSquaredSide) throw GuardError("squared sides: component exceeds 2^66");
  if (r < p + q) return;
  // sqrt(p) + sqrt(q) > sqrt(r)  <=>  (r - p - q)^2 < 4pq  when r >= p + q
  const UWide d = r - p - q;
  if (!detail::product_less(d, d, 4 * p, q))
    throw GuardError("squared sides: triangle inequality fails (degenerate triangle)");
}

auto squared_length(LatticePoint a, LatticePoint b) -> UWide {
  const Wide dx = Wide{b.x} - a.x;
  const Wide dy = Wide{b.y} - a.y;
  return static_cast<UWide>(dx * dx + dy * dy);
}

} // namespace

namespace detail {

auto product_less(UWide a, UWide b, UWide c, UWide d) -> bool {
  const U256 lhs = mul_wide(a, b);
  const U256 rhs = mul_wide(c, d);
  return lhs.hi < rhs.hi || (lhs.hi == rhs.hi && lhs.lo < rhs.lo);
}

auto gcd(UWide a, UWide b) -> UWide {
  while (b != 0) a = std::exchange(b, a % b);
  return a;
}

} // namespace detail

auto to_string(UWide value) -> std::string {
  if (value == 0) return "0";
  std::string out;
  while (value != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

auto parse_uwide(std::string_view text) -> UWide {
  if (text.empty()) throw GuardError("integer: empty field");
  constexpr UWide limit = ~UWide{0};
  UWide value = 0;
  for (const char ch : text) {
    if (ch < '0' || ch > '9') throw GuardError("integer: invalid digit in '" + std::string(text) + "'");
    const auto digit = static_cast<unsigned>(ch - '0');
    if (value > (limit - digit) / 10) throw GuardError("integer: overflow in '" + std::string(text) + "'");
    value = value * 10 + digit;
  }
  return value;
}

auto to_string(AngleClass c) -> std::string_view {
  switch (c) {
  case AngleClass::Acute: return "acute";
  case AngleClass::Right: return "right";
  case AngleClass::Obtuse: return "obtuse";
  }
  return "unknown";
}

LatticeTriangle::LatticeTriangle(LatticePoint a, LatticePoint b, LatticePoint c) : a_(a), b_(b), c_(c) {
  if (!fits_coordinate_width(a) || !fits_coordinate_width(b) || !fits_coordinate_width(c))
    throw GuardError("lattice triangle: coordinate wider than 32 bits");
  if (a == b || b == c || a == c) throw GuardError("lattice triangle: repeated vertex");
  if (is_collinear(a, b, c)) throw GuardError("lattice triangle: collinear vertices");
}

auto SquaredSides::from_unsorted(UWide s0, UWide s1, UWide s2) -> SquaredSides {
  const auto s = sorted(s0, s1, s2);
  validate_sorted(s);
  return {s[0], s[1], s[2]};
}

auto SimilarityKey::from_sides(UWide s0, UWide s1, UWide s2) -> SimilarityKey {
  auto s = sorted(s0, s1, s2);
  validate_sorted(s);
  const UWide g = detail::gcd(detail::gcd(s[0], s[1]), s[2]);
  return {s[0] / g, s[1] / g, s[2] / g};
}

auto SimilarityKey::from_sides(const SquaredSides &s) -> SimilarityKey {
  return from_sides(s.p(), s.q(), s.r());
}

auto squared_sides(const LatticeTriangle &t) -> SquaredSides {
  return SquaredSides::from_unsorted(squared_length(t.a(), t.b()), squared_length(t.b(), t.c()),
                                     squared_length(t.c(), t.a()));
}

auto similarity_key(const LatticeTriangle &t) -> SimilarityKey {
  return SimilarityKey::from_sides(squared_sides(t));
}

} // namespace trimoduli
