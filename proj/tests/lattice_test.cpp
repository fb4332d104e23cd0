#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "trimoduli/error.hpp"
#include "trimoduli/lattice.hpp"
#include "trimoduli/moduli.hpp"

#include <cmath>
#include <random>

using namespace trimoduli;

namespace {

auto key(UWide p, UWide q, UWide r) -> SimilarityKey { return SimilarityKey::from_sides(p, q, r); }

auto tri(LatticePoint a, LatticePoint b, LatticePoint c) -> LatticeTriangle { return {a, b, c}; }

auto same(const SquaredSides &s, UWide p, UWide q, UWide r) -> bool { return s.p() == p && s.q() == q && s.r() == r; }
auto same(const SimilarityKey &s, UWide p, UWide q, UWide r) -> bool { return s.p() == p && s.q() == q && s.r() == r; }

} // namespace

TEST_CASE("is_collinear") {
  CHECK(is_collinear({0, 0}, {1, 0}, {2, 0}));
  CHECK_FALSE(is_collinear({0, 0}, {1, 0}, {0, 1}));
  CHECK(is_collinear({0, 0}, {2, 3}, {4, 6}));
  // products near 2^64 stay exact
  CHECK_FALSE(is_collinear({INT32_MIN, INT32_MIN}, {INT32_MAX, INT32_MAX}, {INT32_MAX, INT32_MAX - 1}));
  CHECK(is_collinear({INT32_MIN, INT32_MIN}, {0, 0}, {INT32_MAX, INT32_MAX}));
}

TEST_CASE("LatticeTriangle rejects invalid vertex sets") {
  CHECK_THROWS_AS(tri({0, 0}, {0, 0}, {1, 1}), GuardError);
  CHECK_THROWS_AS(tri({0, 0}, {1, 1}, {2, 2}), GuardError);
  CHECK_THROWS_AS(tri({0, 0}, {std::int64_t{1} << 32, 0}, {0, 1}), GuardError);
  CHECK_NOTHROW(tri({INT32_MIN, 0}, {INT32_MAX, 0}, {0, INT32_MAX}));
}

TEST_CASE("squared_sides") {
  CHECK(same(squared_sides(tri({0, 0}, {1, 0}, {0, 1})), 1, 1, 2));
  CHECK(same(squared_sides(tri({0, 0}, {4, 0}, {0, 3})), 9, 16, 25));
  CHECK(same(squared_sides(tri({0, 0}, {2, 0}, {1, 2})), 4, 5, 5));

  SUBCASE("full 32-bit range needs more than 64 bits") {
    const SquaredSides s = squared_sides(tri({INT32_MIN, INT32_MIN}, {INT32_MAX, INT32_MAX}, {INT32_MIN, INT32_MAX}));
    const UWide span = (UWide{1} << 32) - 1;
    CHECK(same(s, span * span, span * span, 2 * span * span));
  }
}

TEST_CASE("SquaredSides validation") {
  CHECK_THROWS_AS(SquaredSides::from_unsorted(0, 1, 1), GuardError);
  CHECK_THROWS_AS(SquaredSides::from_unsorted(1, 1, 4), GuardError); // 1 + 1 = 2 = sqrt(4)
  CHECK_THROWS_AS(SquaredSides::from_unsorted(1, 4, 9), GuardError); // collinear 1 + 2 = 3
  CHECK_THROWS_AS(SquaredSides::from_unsorted(1, 1, 5), GuardError);
  CHECK_NOTHROW(SquaredSides::from_unsorted(1, 1, 3));
  CHECK_NOTHROW(SquaredSides::from_unsorted(4, 1, 8)); // r > p + q but 1 + 2 > sqrt(8)
  CHECK(same(SquaredSides::from_unsorted(25, 9, 16), 9, 16, 25));
  CHECK_THROWS_AS(SquaredSides::from_unsorted(1, 1, kMaxSquaredSide + 1), GuardError);
}

TEST_CASE("exact wide product comparison") {
  const UWide big = (UWide{1} << 66) + 12345;
  CHECK(detail::product_less(big, big, big, big + 1));
  CHECK_FALSE(detail::product_less(big + 1, big, big, big + 1));
  CHECK_FALSE(detail::product_less(big, big, big, big));
  CHECK(detail::product_less(3, 5, 4, 4));
}

TEST_CASE("similarity_key") {
  CHECK(same(similarity_key(tri({0, 0}, {2, 0}, {0, 2})), 1, 1, 2));
  CHECK(same(similarity_key(tri({0, 0}, {4, 0}, {0, 3})), 9, 16, 25));
  CHECK(same(similarity_key(tri({0, 0}, {3, 0}, {-1, 1})), 2, 9, 17));
  CHECK(similarity_key(tri({0, 0}, {2, 0}, {0, 2})) == similarity_key(tri({5, 5}, {5, 6}, {6, 5})));
  CHECK(similarity_key(tri({0, 0}, {4, 0}, {0, 3})) != similarity_key(tri({0, 0}, {2, 0}, {1, 2})));
}

TEST_CASE("classify_angle") {
  CHECK(classify_angle(key(1, 1, 2)) == AngleClass::Right);
  CHECK(classify_angle(key(2, 9, 17)) == AngleClass::Obtuse);
  CHECK(classify_angle(key(4, 5, 5)) == AngleClass::Acute);
  CHECK(to_string(AngleClass::Right) == "right");
}

TEST_CASE("shape_of") {
  const auto s345 = shape_of(key(9, 16, 25));
  CHECK(s345.a() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(s345.b() == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(s345.c() == doctest::Approx(5.0 / 6.0).epsilon(1e-15));

  const auto iso = shape_of(key(1, 1, 2));
  CHECK(iso.a() == doctest::Approx(2 - std::sqrt(2.0)).epsilon(1e-15));
  CHECK(iso.b() == iso.a());
  CHECK(iso.c() == doctest::Approx(2 * std::sqrt(2.0) - 2).epsilon(1e-15));

  const auto eq = shape_of(key(1, 1, 1));
  CHECK(eq.a() == doctest::Approx(2.0 / 3.0));
  CHECK(eq.c() == doctest::Approx(2.0 / 3.0));

  // extended precision agrees with double
  const auto wide = shape_of<long double>(key(2, 9, 17));
  const auto narrow = shape_of(key(2, 9, 17));
  CHECK(std::abs(static_cast<double>(wide.c()) - narrow.c()) < 1e-15);
}

TEST_CASE("key invariance under lattice symmetries, translation and scaling") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::int64_t> coord(-1000, 1000);
  std::uniform_int_distribution<std::int64_t> scale(1, 50);
  const auto transforms = std::array<std::function<LatticePoint(LatticePoint)>, 8>{
      [](LatticePoint p) { return LatticePoint{p.x, p.y}; },   [](LatticePoint p) { return LatticePoint{-p.x, p.y}; },
      [](LatticePoint p) { return LatticePoint{p.x, -p.y}; },  [](LatticePoint p) { return LatticePoint{-p.x, -p.y}; },
      [](LatticePoint p) { return LatticePoint{p.y, p.x}; },   [](LatticePoint p) { return LatticePoint{-p.y, p.x}; },
      [](LatticePoint p) { return LatticePoint{p.y, -p.x}; },  [](LatticePoint p) { return LatticePoint{-p.y, -p.x}; }};

  for (int trial = 0; trial < 2000; ++trial) {
    const LatticePoint a{coord(rng), coord(rng)}, b{coord(rng), coord(rng)}, c{coord(rng), coord(rng)};
    if (a == b || b == c || a == c || is_collinear(a, b, c)) continue;
    const SimilarityKey k = similarity_key(tri(a, b, c));
    const LatticePoint shift{coord(rng), coord(rng)};
    const std::int64_t s = scale(rng);
    for (const auto &f : transforms) {
      const auto g = [&](LatticePoint p) {
        const LatticePoint q = f(p);
        return LatticePoint{q.x * s + shift.x, q.y * s + shift.y};
      };
      REQUIRE(similarity_key(tri(g(a), g(b), g(c))) == k);
    }
    // vertex order does not matter
    REQUIRE(similarity_key(tri(c, a, b)) == k);
    REQUIRE(similarity_key(tri(b, a, c)) == k);
  }
}

TEST_CASE("no lattice triangle in [-4,4]^2 is equilateral") {
  const SimilarityKey equilateral = key(1, 1, 1);
  for (std::int64_t ax = -4; ax <= 4; ++ax)
    for (std::int64_t ay = -4; ay <= 4; ++ay)
      for (std::int64_t bx = -4; bx <= 4; ++bx)
        for (std::int64_t by = -4; by <= 4; ++by)
          for (std::int64_t cx = -4; cx <= 4; ++cx)
            for (std::int64_t cy = -4; cy <= 4; ++cy) {
              const LatticePoint a{ax, ay}, b{bx, by}, c{cx, cy};
              if (a == b || b == c || a == c || is_collinear(a, b, c)) continue;
              REQUIRE(similarity_key(tri(a, b, c)) != equilateral);
            }
}

TEST_CASE("right classification matches an independent dot-product test") {
  for (std::int64_t bx = -4; bx <= 4; ++bx)
    for (std::int64_t by = -4; by <= 4; ++by)
      for (std::int64_t cx = -4; cx <= 4; ++cx)
        for (std::int64_t cy = -4; cy <= 4; ++cy) {
          const LatticePoint a{0, 0}, b{bx, by}, c{cx, cy};
          if (a == b || b == c || a == c || is_collinear(a, b, c)) continue;
          const bool right = classify_angle(similarity_key(tri(a, b, c))) == AngleClass::Right;
          REQUIRE(right == oracle::has_right_angle({0, 0}, {bx, by}, {cx, cy}));
        }
}

TEST_CASE("shape_of stays on the moduli simplex") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> coord(-300, 300);
  for (int trial = 0; trial < 5000; ++trial) {
    const LatticePoint a{coord(rng), coord(rng)}, b{coord(rng), coord(rng)}, c{coord(rng), coord(rng)};
    if (a == b || b == c || a == c || is_collinear(a, b, c)) continue;
    const ShapeTriple s = shape_of(similarity_key(tri(a, b, c)));
    REQUIRE(std::abs(s.a() + s.b() + s.c() - 2.0) < 1e-12);
    REQUIRE(s.a() <= s.b());
    REQUIRE(s.b() <= s.c());
    REQUIRE(s.c() <= 1.0 - 1e-15);
  }
}

TEST_CASE("decimal conversion of wide integers") {
  const UWide v = (UWide{1} << 100) + 7;
  CHECK(parse_uwide(to_string(v)) == v);
  CHECK(to_string(UWide{0}) == "0");
  CHECK_THROWS_AS(parse_uwide("12a"), GuardError);
  CHECK_THROWS_AS(parse_uwide(""), GuardError);
  CHECK_THROWS_AS(parse_uwide("999999999999999999999999999999999999999999"), GuardError);
}
