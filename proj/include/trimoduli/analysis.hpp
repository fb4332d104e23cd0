#pragma once

#include "trimoduli/moduli.hpp"

#include <cstdint>
#include <numbers>
#include <vector>

namespace trimoduli {

/// Probability that a random triangle in the unit square is obtuse,
/// 97/150 + pi/40.
inline auto langford_obtuse_probability() -> double { return 97.0 / 150.0 + std::numbers::pi / 40.0; }

/// Reference mean distance between two random points of the unit square.
inline constexpr double kMeanPairDistance = 0.5214;

inline constexpr std::int64_t kMaxAnalysisHalfWidth = 64;

struct ObtuseCurvePoint {
  std::int64_t n = 0;
  double weighted_fraction = 0.0;
  double distinct_fraction = 0.0;
  std::uint64_t total_weight = 0;
  std::uint64_t distinct_count = 0;
  std::uint64_t obtuse_weight = 0;
  std::uint64_t obtuse_count = 0;

  friend auto operator==(const ObtuseCurvePoint &, const ObtuseCurvePoint &) -> bool = default;
};

/// Obtuse shares of a census: by weight and by distinct class.
auto curve_point(const WeightedShapeSet &census, std::int64_t n) -> ObtuseCurvePoint;

/// curve_point(enumerate_weighted(n), n) for a single n >= 1.
auto obtuse_curve_point(std::int64_t n) -> ObtuseCurvePoint;

/// One point per n in [2, n_max]; n_max must lie in [2, 64].
auto obtuse_curve(std::int64_t n_max) -> std::vector<ObtuseCurvePoint>;

struct EquidistReport {
  std::int64_t n = 0;
  double empirical_ratio = 0.0;
  double uniform_target = 0.0;
  double langford = 0.0;
  double gap_to_uniform = 0.0;
  double gap_to_langford = 0.0;

  friend auto operator==(const EquidistReport &, const EquidistReport &) -> bool = default;
};

/// Compares the obtuse share of a census with the uniform-measure prediction
/// and with the random-triangle probability.
auto equidist_report(const WeightedShapeSet &census, std::int64_t n) -> EquidistReport;

/// equidist_report on enumerate_weighted(n); n must lie in [2, 64].
auto equidist_report(std::int64_t n) -> EquidistReport;

/// Uniform probability of each cell of the bins x bins grid over the unit
/// ab-square restricted to a + b > 1: full cells 2/bins^2, cells cut by the
/// diagonal 1/bins^2, others 0.
auto uniform_cell_mass(int bins) -> Eigen::MatrixXd;

/// Each key spreads its weight equally over its six edge labellings; returns
/// the normalized cell masses on the same grid.
auto labeled_cell_mass(const WeightedShapeSet &s, int bins) -> Eigen::MatrixXd;

/// Total variation distance between labeled_cell_mass and uniform_cell_mass.
auto compare_to_uniform(const WeightedShapeSet &s, int bins) -> double;

} // namespace trimoduli
