#pragma once

#include "trimoduli/analysis.hpp"
#include "trimoduli/diophantine.hpp"
#include "trimoduli/moduli.hpp"
#include "trimoduli/randgeom.hpp"

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace trimoduli {

/// Raised when a file cannot be opened or written, or an input file is malformed.
class IoError : public Error {
public:
  using Error::Error;
};

/// Schema tags. CSV files start with "# <tag> v<version>", JSON documents carry
/// "schema" and "version" members.
inline constexpr const char *kWeightedSetSchema = "trimoduli.weighted-set";
inline constexpr const char *kCurveSchema = "trimoduli.obtuse-curve";
inline constexpr const char *kReportSchema = "trimoduli.equidist-report";
inline constexpr const char *kEstimateSchema = "trimoduli.mc-estimate";
inline constexpr const char *kHistogramSchema = "trimoduli.shape-histogram";
inline constexpr const char *kApproximationSchema = "trimoduli.approximation";
inline constexpr int kSchemaVersion = 1;

/// Shortest decimal that reads back to the same double.
auto format_double(double v) -> std::string;

/// Columns p,q,r,weight,angle_class,a,b,c sorted by (p,q,r).
void write_weighted_set_csv(const WeightedShapeSet &s, std::ostream &out);
void write_weighted_set_json(const WeightedShapeSet &s, std::ostream &out);
/// Reads the CSV written above; the shape columns are ignored. Malformed input
/// throws IoError naming the line.
auto read_weighted_set_csv(std::istream &in) -> WeightedShapeSet;

void write_curve_csv(std::span<const ObtuseCurvePoint> curve, std::ostream &out);
void write_curve_json(std::span<const ObtuseCurvePoint> curve, std::ostream &out);

void write_report_csv(const EquidistReport &r, std::ostream &out);
void write_report_json(const EquidistReport &r, std::ostream &out);

void write_estimate_csv(const McEstimate &e, std::string_view quantity, std::ostream &out);
void write_estimate_json(const McEstimate &e, std::string_view quantity, std::ostream &out);

/// Non-empty cells only, as i,j,a_lo,b_lo,count.
void write_histogram_csv(const Histogram2D &h, std::ostream &out);
void write_histogram_json(const Histogram2D &h, std::ostream &out);

struct ShapeApproximation {
  ShapeTriple target;
  double eps;
  LatticeTriangle triangle;
  SimilarityKey key;
  ShapeTriple achieved;
  double distance;
};

auto describe_approximation(const ShapeTriple &target, double eps, const LatticeTriangle &t) -> ShapeApproximation;
void write_approximation_csv(const ShapeApproximation &a, std::ostream &out);
void write_approximation_json(const ShapeApproximation &a, std::ostream &out);

/// A point of the ab-plane carrying a positive weight.
struct WeightedPlanePoint {
  double a;
  double b;
  std::uint64_t weight;
};

/// Distinct labelled projections of every key, each carrying the key weight:
/// 6 points per scalene key, 3 per isosceles key.
auto orbit_points(const WeightedShapeSet &s) -> std::vector<WeightedPlanePoint>;

/// All six labelled projections of each random sample, weight 1.
auto sample_points(std::uint64_t samples, std::uint64_t seed) -> std::vector<WeightedPlanePoint>;

/// SVG 1.1 scatter over the Teichmueller region with its boundary, the three
/// isosceles segments and the equilateral point. One circle of class "pt" per
/// input point.
void plot_shapes(std::span<const WeightedPlanePoint> points, std::ostream &out);

/// SVG 1.1 chart of weighted (blue) and distinct (orange) obtuse fractions
/// against n, with reference lines at the random-triangle probability and
/// the uniform-measure prediction.
void plot_curve(std::span<const ObtuseCurvePoint> curve, std::ostream &out);

/// Opens path for writing, runs write and flushes; IoError on failure.
void write_file(const std::filesystem::path &path, const std::function<void(std::ostream &)> &write);

} // namespace trimoduli
