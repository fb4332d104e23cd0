#pragma once

#include "trimoduli/moduli.hpp"
#include "trimoduli/rng.hpp"

#include <Eigen/Core>

#include <cstdint>

namespace trimoduli {

/// Samples are drawn in fixed-size chunks; chunk c uses Stream(seed, c), so
/// results depend only on (samples, seed).
inline constexpr std::uint64_t kSamplesPerChunk = std::uint64_t{1} << 16;

/// Tie margin for the floating obtuse test r > p + q + margin.
inline constexpr double kObtuseMargin = 1e-15;

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;

  friend auto operator==(const McEstimate &, const McEstimate &) -> bool = default;
};

/// Three vertices in the unit square.
struct UnitSquareTriangle {
  Vector2<double> a;
  Vector2<double> b;
  Vector2<double> c;
};

/// Draws three uniform points in [0,1]^2, redrawing while the triple is
/// collinear or too thin for a valid normalized shape.
auto draw_triangle(Stream &stream) -> UnitSquareTriangle;

/// Sorted normalized side triple of a non-degenerate triangle.
auto triangle_shape(const UnitSquareTriangle &t) -> ShapeTriple;

/// Fraction of random triangles in the unit square that are obtuse. Needs at
/// least 1000 samples.
auto obtuse_probability(std::uint64_t samples, std::uint64_t seed) -> McEstimate;

/// Mean distance between two uniform points in the unit square. Needs at
/// least 1000 samples.
auto mean_pair_distance(std::uint64_t samples, std::uint64_t seed) -> McEstimate;

enum class HistogramMode {
  Labeled, ///< all 6 edge labellings per sample (Teichmueller space)
  Sorted,  ///< only a <= b <= c (moduli space)
};

/// Counts over a bins x bins grid of the unit ab-square; cell (i, j) covers
/// a in [i/bins, (i+1)/bins), b in [j/bins, (j+1)/bins). Only cells meeting
/// a + b > 1 can be populated.
struct Histogram2D {
  Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> counts;
  int bins = 0;
  std::int64_t total = 0;

  friend auto operator==(const Histogram2D &x, const Histogram2D &y) -> bool {
    return x.bins == y.bins && x.total == y.total && x.counts == y.counts;
  }
};

/// Cell index of a coordinate in [0, 1).
constexpr auto histogram_cell(double v, int bins) -> int {
  const int i = static_cast<int>(v * bins);
  return i < 0 ? 0 : (i >= bins ? bins - 1 : i);
}

/// Empirical distribution of random triangle shapes in the ab-plane.
auto shape_histogram(std::uint64_t samples, int bins, std::uint64_t seed,
                     HistogramMode mode = HistogramMode::Labeled) -> Histogram2D;

/// Share of the histogram mass whose cell centre lies in the labeled obtuse
/// region.
auto obtuse_mass_fraction(const Histogram2D &h) -> double;

} // namespace trimoduli
