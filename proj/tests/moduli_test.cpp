#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "trimoduli/error.hpp"
#include "trimoduli/moduli.hpp"

#include <cmath>
#include <random>
#include <set>

using namespace trimoduli;

namespace {

auto key(UWide p, UWide q, UWide r) -> SimilarityKey { return SimilarityKey::from_sides(p, q, r); }

// Width of the obtuse-at-c strip over b: 1 - b < a < a_right(b), from
// (2 - a - b)^2 > a^2 + b^2 expanded by hand.
auto strip_width(double b) -> double { return std::max(0.0, 2 * (1 - b) / (2 - b) - (1 - b)); }

} // namespace

TEST_CASE("triple validation") {
  CHECK_NOTHROW(ShapeTriple::from_sorted(0.5, 0.7, 0.8));
  CHECK_THROWS_AS(ShapeTriple::from_sorted(0.7, 0.5, 0.8), GuardError);
  CHECK_THROWS_AS(ShapeTriple::from_sorted(0.5, 0.5, 1.0), GuardError);
  CHECK_THROWS_AS(ShapeTriple::from_sorted(0.5, 0.6, 0.8), GuardError);
  CHECK_THROWS_AS(ShapeTriple::from_sorted(0.0, 1.0, 1.0), GuardError);
  CHECK_NOTHROW(LabeledTriple::make(0.8, 0.5, 0.7));
  CHECK_THROWS_AS(LabeledTriple::make(1.0, 0.5, 0.5), GuardError);
  CHECK_THROWS_AS(PlanePoint::make(0.4, 0.5), GuardError);
  CHECK_THROWS_AS(PlanePoint::make(1.0, 0.5), GuardError);
  CHECK_NOTHROW(PlanePoint::make(0.6, 0.5));
}

TEST_CASE("shape_from_lengths normalizes by the semi-perimeter") {
  const auto s = shape_from_lengths(5.0, 3.0, 4.0);
  CHECK(s.a() == doctest::Approx(0.5));
  CHECK(s.b() == doctest::Approx(2.0 / 3.0));
  CHECK(s.c() == doctest::Approx(5.0 / 6.0));
  CHECK_THROWS_AS(shape_from_lengths(1.0, 2.0, 3.0), GuardError);
  CHECK_THROWS_AS(shape_from_lengths(1.0, 1.0, 5.0), GuardError);
}

TEST_CASE("s3_orbit") {
  CHECK(s3_orbit(shape_from_lengths(3.0, 4.0, 5.0)).size() == 6);
  CHECK(s3_orbit(shape_from_lengths(1.0, 1.0, std::sqrt(2.0))).size() == 3);
  CHECK(s3_orbit(shape_from_lengths(1.0, 1.0, 1.0)).size() == 1);
  for (const auto &t : s3_orbit(shape_from_lengths(3.0, 4.0, 5.0))) {
    const auto back = sorted_shape(t);
    CHECK(back.c() == doctest::Approx(5.0 / 6.0));
    const auto pt = to_plane(t);
    CHECK(pt.a() + pt.b() > 1.0);
  }
}

TEST_CASE("measures against independent area computations") {
  // Teichmuller region: a, b < 1 < a + b.
  const double teich = oracle::shoelace({{{0.0, 1.0}}, {{1.0, 0.0}}, {{1.0, 1.0}}});
  CHECK(measure_teich() == doctest::Approx(teich).epsilon(1e-15));

  // sorted region a <= b <= c, cut out by a = b, a + 2b = 2 and a + b = 1
  const double moduli = oracle::shoelace({{{0.5, 0.5}}, {{2.0 / 3.0, 2.0 / 3.0}}, {{0.0, 1.0}}});
  CHECK(measure_moduli() == doctest::Approx(moduli).epsilon(1e-15));
  CHECK(measure_teich() / measure_moduli() == doctest::Approx(6.0));

  const double single = oracle::simpson(strip_width, 0.0, 1.0, 2000);
  CHECK(std::abs(single_obtuse_region_measure() - single) < 1e-12);
  CHECK(std::abs(obtuse_region_measure() - 3 * single) < 1e-12);
  CHECK(obtuse_region_measure() == doctest::Approx(0.341116917).epsilon(1e-9));
  CHECK(uniform_target(ModuliRegion::ObtuseAll) == doctest::Approx(0.682233833).epsilon(1e-9));
  CHECK(uniform_target(ModuliRegion::Acute) + uniform_target(ModuliRegion::ObtuseAll) == doctest::Approx(1.0));
  CHECK(uniform_target(ModuliRegion::Full) == 1.0);
}

TEST_CASE("obtuse measure by grid counting over the labeled region") {
  // cell-midpoint count, resolution 1/1200
  const int m = 1200;
  std::uint64_t inside = 0, teich = 0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const double a = (i + 0.5) / m, b = (j + 0.5) / m, c = 2 - a - b;
      if (a + b <= 1) continue;
      ++teich;
      if (a * a > b * b + c * c || b * b > a * a + c * c || c * c > a * a + b * b) ++inside;
    }
  CHECK(std::abs(static_cast<double>(inside) / teich - uniform_target(ModuliRegion::ObtuseAll)) < 2e-3);
}

TEST_CASE("right_locus") {
  for (double b : {0.05, 0.3, 0.5, 0.9}) {
    const double a = right_locus(b), c = 2 - a - b;
    CHECK(c * c == doctest::Approx(a * a + b * b).epsilon(1e-14));
  }
  CHECK_THROWS_AS(right_locus(0.0), GuardError);
  CHECK_THROWS_AS(right_locus(1.0), GuardError);
  CHECK(right_locus<long double>(0.5L) == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("region_contains agrees between exact keys and real shapes") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> coord(-60, 60);
  for (int trial = 0; trial < 3000; ++trial) {
    const LatticePoint a{coord(rng), coord(rng)}, b{coord(rng), coord(rng)}, c{coord(rng), coord(rng)};
    if (a == b || b == c || a == c || is_collinear(a, b, c)) continue;
    const SimilarityKey k = similarity_key(LatticeTriangle(a, b, c));
    if (classify_angle(k) == AngleClass::Right) {
      REQUIRE_FALSE(region_contains(ModuliRegion::ObtuseAll, k));
      REQUIRE_FALSE(region_contains(ModuliRegion::Acute, k));
      continue;
    }
    const ShapeTriple s = shape_of(k);
    for (auto region : {ModuliRegion::ObtuseAll, ModuliRegion::Acute, ModuliRegion::Full})
      REQUIRE(region_contains(region, k) == region_contains(region, s));
  }
}

TEST_CASE("WeightedShapeSet") {
  const auto s = WeightedShapeSet::from_entries({{key(9, 16, 25), 3}, {key(1, 1, 2), 2}, {key(9, 16, 25), 4}});
  CHECK(s.size() == 2);
  CHECK(s.total_weight() == 9);
  CHECK(s.weight_of(key(9, 16, 25)) == 7);
  CHECK(s.weight_of(key(1, 1, 1)) == 0);
  CHECK(s.contains(key(1, 1, 2)));
  CHECK(s.entries().front().key == key(1, 1, 2));
  CHECK_THROWS_AS(WeightedShapeSet::from_entries({{key(1, 1, 2), 0}}), GuardError);

  const auto t = WeightedShapeSet::from_entries({{key(2, 9, 17), 1}, {key(4, 5, 5), 3}});
  CHECK(dirac_ratio(t, ModuliRegion::ObtuseAll) == doctest::Approx(0.25));
  CHECK(dirac_ratio(t, ModuliRegion::Acute) == doctest::Approx(0.75));
  CHECK(dirac_ratio(t, ModuliRegion::Full) == 1.0);
  CHECK_THROWS_AS(dirac_ratio(WeightedShapeSet{}, ModuliRegion::Full), GuardError);
}

TEST_CASE("shape_distance is a metric on random triples") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> side(0.1, 1.0);
  const auto draw = [&] {
    while (true) {
      const double x = side(rng), y = side(rng), z = side(rng);
      try {
        return shape_from_lengths(x, y, z);
      } catch (const GuardError &) {
      }
    }
  };
  for (int i = 0; i < 500; ++i) {
    const auto x = draw(), y = draw(), z = draw();
    REQUIRE(shape_distance(x, x) == 0.0);
    REQUIRE(shape_distance(x, y) == doctest::Approx(shape_distance(y, x)));
    REQUIRE(shape_distance(x, z) <= shape_distance(x, y) + shape_distance(y, z) + 1e-15);
  }
}
