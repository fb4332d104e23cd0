#include "trimoduli/analysis.hpp"

#include "trimoduli/enumeration.hpp"
#include "trimoduli/error.hpp"
#include "trimoduli/randgeom.hpp"

#include <array>
#include <cmath>
#include <string>

namespace trimoduli {

namespace {

void require_analysis_range(std::int64_t n, const char *what) {
  if (n < 2 || n > kMaxAnalysisHalfWidth)
    throw GuardError(std::string(what) + ": n must lie in [2, 64], got " + std::to_string(n));
}

void require_bins(int bins) {
  if (bins < 2 || bins > 4096) throw GuardError("compare_to_uniform: bins must lie in [2, 4096]");
}

} // namespace

auto curve_point(const WeightedShapeSet &census, std::int64_t n) -> ObtuseCurvePoint {
  if (census.empty()) throw GuardError("curve_point: empty census");
  ObtuseCurvePoint pt;
  pt.n = n;
  pt.total_weight = census.total_weight();
  pt.distinct_count = census.size();
  for (const auto &e : census.entries()) {
    if (!region_contains(ModuliRegion::ObtuseAll, e.key)) continue;
    pt.obtuse_weight += e.weight;
    ++pt.obtuse_count;
  }
  pt.weighted_fraction = static_cast<double>(pt.obtuse_weight) / static_cast<double>(pt.total_weight);
  pt.distinct_fraction = static_cast<double>(pt.obtuse_count) / static_cast<double>(pt.distinct_count);
  return pt;
}

auto obtuse_curve_point(std::int64_t n) -> ObtuseCurvePoint { return curve_point(enumerate_weighted(n), n); }

auto obtuse_curve(std::int64_t n_max) -> std::vector<ObtuseCurvePoint> {
  require_analysis_range(n_max, "obtuse_curve");
  std::vector<ObtuseCurvePoint> curve;
  for (std::int64_t n = 2; n <= n_max; ++n) curve.push_back(obtuse_curve_point(n));
  return curve;
}

auto equidist_report(const WeightedShapeSet &census, std::int64_t n) -> EquidistReport {
  EquidistReport r;
  r.n = n;
  r.empirical_ratio = dirac_ratio(census, ModuliRegion::ObtuseAll);
  r.uniform_target = uniform_target(ModuliRegion::ObtuseAll);
  r.langford = langford_obtuse_probability();
  r.gap_to_uniform = std::abs(r.empirical_ratio - r.uniform_target);
  r.gap_to_langford = std::abs(r.empirical_ratio - r.langford);
  return r;
}

auto equidist_report(std::int64_t n) -> EquidistReport {
  require_analysis_range(n, "equidist_report");
  return equidist_report(enumerate_weighted(n), n);
}

auto uniform_cell_mass(int bins) -> Eigen::MatrixXd {
  require_bins(bins);
  const double cell = 1.0 / (static_cast<double>(bins) * bins) / measure_teich();
  Eigen::MatrixXd mass = Eigen::MatrixXd::Zero(bins, bins);
  for (int i = 0; i < bins; ++i)
    for (int j = 0; j < bins; ++j) {
      if (i + j >= bins) mass(i, j) = cell;
      else if (i + j == bins - 1) mass(i, j) = cell / 2; // the diagonal a + b = 1 halves it
    }
  return mass;
}

auto labeled_cell_mass(const WeightedShapeSet &s, int bins) -> Eigen::MatrixXd {
  require_bins(bins);
  if (s.empty()) throw GuardError("compare_to_uniform: empty weighted set");
  // integer tallies keep the result exactly invariant under weight scaling
  Eigen::Matrix<std::uint64_t, Eigen::Dynamic, Eigen::Dynamic> tally =
      Eigen::Matrix<std::uint64_t, Eigen::Dynamic, Eigen::Dynamic>::Zero(bins, bins);
  constexpr int kLabellings[6][2] = {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}};
  for (const auto &e : s.entries()) {
    const ShapeTriple shape = shape_of(e.key);
    const std::array<double, 3> side{shape.a(), shape.b(), shape.c()};
    for (const auto &l : kLabellings) tally(histogram_cell(side[l[0]], bins), histogram_cell(side[l[1]], bins)) += e.weight;
  }
  const double total = 6.0 * static_cast<double>(s.total_weight());
  return tally.cast<double>() / total;
}

auto compare_to_uniform(const WeightedShapeSet &s, int bins) -> double {
  return 0.5 * (labeled_cell_mass(s, bins) - uniform_cell_mass(bins)).cwiseAbs().sum();
}

} // namespace trimoduli
