#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace trimoduli {

/// Unsigned 128-bit integer used for every squared length.
__extension__ using UWide = unsigned __int128;
/// Signed 128-bit integer used for cross and dot products.
__extension__ using Wide = __int128;

/// Largest component accepted in a SquaredSides or SimilarityKey. Any triangle
/// with 32-bit coordinates has squared sides at most 2^65.
inline constexpr UWide kMaxSquaredSide = UWide{1} << 66;

auto to_string(UWide value) -> std::string;
/// Parses a non-negative decimal integer; throws GuardError on junk or overflow.
auto parse_uwide(std::string_view text) -> UWide;

struct LatticePoint {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend constexpr auto operator==(const LatticePoint &, const LatticePoint &) -> bool = default;
  friend constexpr auto operator<=>(const LatticePoint &, const LatticePoint &) = default;
};

/// True iff both coordinates fit in a signed 32-bit integer.
constexpr auto fits_coordinate_width(LatticePoint p) -> bool {
  return p.x >= INT32_MIN && p.x <= INT32_MAX && p.y >= INT32_MIN && p.y <= INT32_MAX;
}

/// Exact cross product (b - a) x (c - a).
constexpr auto cross(LatticePoint a, LatticePoint b, LatticePoint c) -> Wide {
  return Wide{b.x - a.x} * Wide{c.y - a.y} - Wide{b.y - a.y} * Wide{c.x - a.x};
}

constexpr auto is_collinear(LatticePoint a, LatticePoint b, LatticePoint c) -> bool {
  return cross(a, b, c) == 0;
}

/// Three distinct, non-collinear lattice points with 32-bit coordinates.
/// Construction throws GuardError otherwise.
class LatticeTriangle {
public:
  LatticeTriangle(LatticePoint a, LatticePoint b, LatticePoint c);

  [[nodiscard]] auto a() const -> LatticePoint { return a_; }
  [[nodiscard]] auto b() const -> LatticePoint { return b_; }
  [[nodiscard]] auto c() const -> LatticePoint { return c_; }

  friend auto operator==(const LatticeTriangle &, const LatticeTriangle &) -> bool = default;

private:
  LatticePoint a_;
  LatticePoint b_;
  LatticePoint c_;
};

/// Sorted integer squared side lengths p <= q <= r of a non-degenerate triangle.
class SquaredSides {
public:
  /// Sorts the three values and validates p >= 1 and the strict triangle
  /// inequality sqrt(p) + sqrt(q) > sqrt(r), tested exactly.
  static auto from_unsorted(UWide s0, UWide s1, UWide s2) -> SquaredSides;

  [[nodiscard]] auto p() const -> UWide { return p_; }
  [[nodiscard]] auto q() const -> UWide { return q_; }
  [[nodiscard]] auto r() const -> UWide { return r_; }

  friend auto operator==(const SquaredSides &, const SquaredSides &) -> bool = default;

private:
  SquaredSides(UWide p, UWide q, UWide r) : p_(p), q_(q), r_(r) {}
  UWide p_;
  UWide q_;
  UWide r_;
};

/// Exact similarity-class identifier: sorted squared sides divided by their gcd.
/// Two lattice triangles are similar iff their keys compare equal.
class SimilarityKey {
public:
  /// Sorts, validates as SquaredSides does, and divides out gcd(p, q, r).
  static auto from_sides(UWide s0, UWide s1, UWide s2) -> SimilarityKey;
  static auto from_sides(const SquaredSides &s) -> SimilarityKey;

  [[nodiscard]] auto p() const -> UWide { return p_; }
  [[nodiscard]] auto q() const -> UWide { return q_; }
  [[nodiscard]] auto r() const -> UWide { return r_; }

  [[nodiscard]] auto is_isosceles() const -> bool { return p_ == q_ || q_ == r_; }

  friend auto operator==(const SimilarityKey &, const SimilarityKey &) -> bool = default;
  friend auto operator<=>(const SimilarityKey &, const SimilarityKey &) = default;

private:
  SimilarityKey(UWide p, UWide q, UWide r) : p_(p), q_(q), r_(r) {}
  UWide p_;
  UWide q_;
  UWide r_;
};

enum class AngleClass { Acute, Right, Obtuse };

auto to_string(AngleClass c) -> std::string_view;

auto squared_sides(const LatticeTriangle &t) -> SquaredSides;
auto similarity_key(const LatticeTriangle &t) -> SimilarityKey;

/// Obtuse iff r > p + q, Right iff r == p + q; exact.
constexpr auto classify_angle(UWide p, UWide q, UWide r) -> AngleClass {
  const UWide legs = p + q;
  if (r > legs) return AngleClass::Obtuse;
  if (r == legs) return AngleClass::Right;
  return AngleClass::Acute;
}

inline auto classify_angle(const SimilarityKey &k) -> AngleClass {
  return classify_angle(k.p(), k.q(), k.r());
}

namespace detail {

/// Exact a * b < c * d for operands below 2^127.
auto product_less(UWide a, UWide b, UWide c, UWide d) -> bool;

auto gcd(UWide a, UWide b) -> UWide;

} // namespace detail

} // namespace trimoduli
