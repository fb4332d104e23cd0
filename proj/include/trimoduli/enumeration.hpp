#pragma once

#include "trimoduli/lattice.hpp"
#include "trimoduli/moduli.hpp"

#include <cstdint>
#include <vector>

namespace trimoduli {

/// Largest half-width accepted by enumerate_weighted. Reduced keys then pack
/// into 64 bits (p, q < 2^21 and r <= 2^21).
inline constexpr std::int64_t kMaxEnumerationHalfWidth = 512;

/// The triangle {0, u, v} modulo integer translation.
struct TranslationClass {
  LatticePoint u;
  LatticePoint v;
};

/// Coordinate spreads (max - min) of the three vertices.
struct BoundingBox {
  std::int64_t w = 0;
  std::int64_t h = 0;
};

constexpr auto bounding_box(const TranslationClass &t) -> BoundingBox {
  const auto spread = [](std::int64_t s, std::int64_t t) {
    return std::max<std::int64_t>({0, s, t}) - std::min<std::int64_t>({0, s, t});
  };
  return {spread(t.u.x, t.v.x), spread(t.u.y, t.v.y)};
}

/// Number of integer translates of a triangle with this bounding box that fit
/// in [-n, n]^2.
constexpr auto translation_multiplicity(BoundingBox bb, std::int64_t n) -> std::uint64_t {
  const std::int64_t side = 2 * n + 1;
  if (bb.w < 0 || bb.h < 0 || bb.w >= side || bb.h >= side) return 0;
  return static_cast<std::uint64_t>(side - bb.w) * static_cast<std::uint64_t>(side - bb.h);
}

/// Closed integer rectangle [x_min, x_max] x [y_min, y_max].
struct LatticeBox {
  std::int64_t x_min = 0;
  std::int64_t x_max = 0;
  std::int64_t y_min = 0;
  std::int64_t y_max = 0;

  static constexpr auto centered(std::int64_t n) -> LatticeBox { return {-n, n, -n, n}; }
};

enum class IterationOrder { Ascending, Descending };

/// Census of every unordered triangle in [-n, n]^2 by similarity class.
///
/// Ordered pairs of edge vectors (u, v) from an anchored vertex are visited
/// once each, weighted by the number of translates that fit in the square.
/// Every unordered triangle is reached by exactly six ordered pairs (three
/// anchors, two orderings), so each per-key total is divided by six; a
/// remainder throws EnumerationError. Work is split across worker_count()
/// threads by u with private accumulators merged by summation, so the result
/// does not depend on the worker count or the iteration order.
auto enumerate_weighted(std::int64_t n, IterationOrder order = IterationOrder::Ascending) -> WeightedShapeSet;

/// Brute-force census over all unordered triples of distinct points in the
/// box. At most 400 lattice points; used as an oracle.
auto enumerate_naive(const LatticeBox &box) -> WeightedShapeSet;

/// Sorted keys of enumerate_weighted(n).
auto distinct_classes(std::int64_t n) -> std::vector<SimilarityKey>;

} // namespace trimoduli
