#include "trimoduli/io.hpp"

#include "trimoduli/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace trimoduli {

using nlohmann::ordered_json;

namespace {

auto schema_line(const char *schema) -> std::string {
  return std::string("# ") + schema + " v" + std::to_string(kSchemaVersion) + "\n";
}

auto schema_header(const char *schema) -> ordered_json {
  return {{"schema", schema}, {"version", kSchemaVersion}};
}

auto wide_json(UWide v) -> ordered_json {
  if (v <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(v);
  return to_string(v);
}

auto fixed3(double v) -> std::string {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed, 3);
  return {buf.data(), res.ptr};
}

auto split_csv(const std::string &line) -> std::vector<std::string> {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(field);
  return fields;
}

auto parse_u64(const std::string &text) -> std::uint64_t {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) throw GuardError("csv: bad integer '" + text + "'");
  return v;
}

constexpr const char *kWeightedHeader = "p,q,r,weight,angle_class,a,b,c";

} // namespace

auto format_double(double v) -> std::string {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return {buf.data(), res.ptr};
}

void write_weighted_set_csv(const WeightedShapeSet &s, std::ostream &out) {
  out << schema_line(kWeightedSetSchema) << kWeightedHeader << '\n';
  for (const auto &e : s.entries()) {
    const ShapeTriple shape = shape_of(e.key);
    out << to_string(e.key.p()) << ',' << to_string(e.key.q()) << ',' << to_string(e.key.r()) << ',' << e.weight << ','
        << to_string(classify_angle(e.key)) << ',' << format_double(shape.a()) << ',' << format_double(shape.b()) << ','
        << format_double(shape.c()) << '\n';
  }
}

void write_weighted_set_json(const WeightedShapeSet &s, std::ostream &out) {
  ordered_json doc = schema_header(kWeightedSetSchema);
  doc["total_weight"] = s.total_weight();
  doc["distinct_count"] = s.size();
  ordered_json entries = ordered_json::array();
  for (const auto &e : s.entries()) {
    const ShapeTriple shape = shape_of(e.key);
    entries.push_back({{"p", wide_json(e.key.p())},
                       {"q", wide_json(e.key.q())},
                       {"r", wide_json(e.key.r())},
                       {"weight", e.weight},
                       {"angle_class", std::string(to_string(classify_angle(e.key)))},
                       {"a", shape.a()},
                       {"b", shape.b()},
                       {"c", shape.c()}});
  }
  doc["entries"] = std::move(entries);
  out << doc.dump(1) << '\n';
}

auto read_weighted_set_csv(std::istream &in) -> WeightedShapeSet {
  std::string line;
  std::size_t line_no = 1;
  const std::string schema = schema_line(kWeightedSetSchema);
  if (!std::getline(in, line) || line + "\n" != schema)
    throw IoError("csv: expected first line '" + schema.substr(0, schema.size() - 1) + "'");
  ++line_no;
  if (!std::getline(in, line) || line != kWeightedHeader) throw IoError("csv: line 2: expected column header");

  std::vector<WeightedShapeSet::Entry> entries;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto f = split_csv(line);
    if (f.size() != 8) throw IoError("csv: line " + std::to_string(line_no) + ": expected 8 fields");
    try {
      entries.push_back(
          {SimilarityKey::from_sides(parse_uwide(f[0]), parse_uwide(f[1]), parse_uwide(f[2])), parse_u64(f[3])});
    } catch (const GuardError &e) {
      throw IoError("csv: line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  try {
    return WeightedShapeSet::from_entries(std::move(entries));
  } catch (const GuardError &e) {
    throw IoError(std::string("csv: ") + e.what());
  }
}

void write_curve_csv(std::span<const ObtuseCurvePoint> curve, std::ostream &out) {
  out << schema_line(kCurveSchema)
      << "n,weighted_fraction,distinct_fraction,total_weight,distinct_count,obtuse_weight,obtuse_count\n";
  for (const auto &p : curve)
    out << p.n << ',' << format_double(p.weighted_fraction) << ',' << format_double(p.distinct_fraction) << ','
        << p.total_weight << ',' << p.distinct_count << ',' << p.obtuse_weight << ',' << p.obtuse_count << '\n';
}

void write_curve_json(std::span<const ObtuseCurvePoint> curve, std::ostream &out) {
  ordered_json doc = schema_header(kCurveSchema);
  ordered_json points = ordered_json::array();
  for (const auto &p : curve)
    points.push_back({{"n", p.n},
                      {"weighted_fraction", p.weighted_fraction},
                      {"distinct_fraction", p.distinct_fraction},
                      {"total_weight", p.total_weight},
                      {"distinct_count", p.distinct_count},
                      {"obtuse_weight", p.obtuse_weight},
                      {"obtuse_count", p.obtuse_count}});
  doc["points"] = std::move(points);
  out << doc.dump(1) << '\n';
}

void write_report_csv(const EquidistReport &r, std::ostream &out) {
  out << schema_line(kReportSchema) << "n,empirical_ratio,uniform_target,langford,gap_to_uniform,gap_to_langford\n"
      << r.n << ',' << format_double(r.empirical_ratio) << ',' << format_double(r.uniform_target) << ','
      << format_double(r.langford) << ',' << format_double(r.gap_to_uniform) << ',' << format_double(r.gap_to_langford)
      << '\n';
}

void write_report_json(const EquidistReport &r, std::ostream &out) {
  ordered_json doc = schema_header(kReportSchema);
  doc["n"] = r.n;
  doc["empirical_ratio"] = r.empirical_ratio;
  doc["uniform_target"] = r.uniform_target;
  doc["langford"] = r.langford;
  doc["gap_to_uniform"] = r.gap_to_uniform;
  doc["gap_to_langford"] = r.gap_to_langford;
  out << doc.dump(1) << '\n';
}

void write_estimate_csv(const McEstimate &e, std::string_view quantity, std::ostream &out) {
  out << schema_line(kEstimateSchema) << "quantity,mean,std_error,samples,seed\n"
      << quantity << ',' << format_double(e.mean) << ',' << format_double(e.std_error) << ',' << e.samples << ','
      << e.seed << '\n';
}

void write_estimate_json(const McEstimate &e, std::string_view quantity, std::ostream &out) {
  ordered_json doc = schema_header(kEstimateSchema);
  doc["quantity"] = std::string(quantity);
  doc["mean"] = e.mean;
  doc["std_error"] = e.std_error;
  doc["samples"] = e.samples;
  doc["seed"] = e.seed;
  out << doc.dump(1) << '\n';
}

void write_histogram_csv(const Histogram2D &h, std::ostream &out) {
  out << schema_line(kHistogramSchema) << "# bins=" << h.bins << " total=" << h.total << "\n"
      << "i,j,a_lo,b_lo,count\n";
  for (int i = 0; i < h.bins; ++i)
    for (int j = 0; j < h.bins; ++j)
      if (h.counts(i, j) != 0)
        out << i << ',' << j << ',' << format_double(static_cast<double>(i) / h.bins) << ','
            << format_double(static_cast<double>(j) / h.bins) << ',' << h.counts(i, j) << '\n';
}

void write_histogram_json(const Histogram2D &h, std::ostream &out) {
  ordered_json doc = schema_header(kHistogramSchema);
  doc["bins"] = h.bins;
  doc["total"] = h.total;
  ordered_json cells = ordered_json::array();
  for (int i = 0; i < h.bins; ++i)
    for (int j = 0; j < h.bins; ++j)
      if (h.counts(i, j) != 0) cells.push_back({i, j, h.counts(i, j)});
  doc["cells"] = std::move(cells);
  out << doc.dump(1) << '\n';
}

auto describe_approximation(const ShapeTriple &target, double eps, const LatticeTriangle &t) -> ShapeApproximation {
  const SimilarityKey key = similarity_key(t);
  const ShapeTriple achieved = shape_of(key);
  return {target, eps, t, key, achieved, shape_distance(achieved, target)};
}

void write_approximation_csv(const ShapeApproximation &a, std::ostream &out) {
  out << schema_line(kApproximationSchema)
      << "target_a,target_b,target_c,eps,ax,ay,bx,by,cx,cy,p,q,r,a,b,c,distance\n"
      << format_double(a.target.a()) << ',' << format_double(a.target.b()) << ',' << format_double(a.target.c()) << ','
      << format_double(a.eps);
  for (const LatticePoint v : {a.triangle.a(), a.triangle.b(), a.triangle.c()}) out << ',' << v.x << ',' << v.y;
  out << ',' << to_string(a.key.p()) << ',' << to_string(a.key.q()) << ',' << to_string(a.key.r()) << ','
      << format_double(a.achieved.a()) << ',' << format_double(a.achieved.b()) << ',' << format_double(a.achieved.c())
      << ',' << format_double(a.distance) << '\n';
}

void write_approximation_json(const ShapeApproximation &a, std::ostream &out) {
  ordered_json doc = schema_header(kApproximationSchema);
  doc["target"] = {a.target.a(), a.target.b(), a.target.c()};
  doc["eps"] = a.eps;
  doc["vertices"] = {{a.triangle.a().x, a.triangle.a().y},
                     {a.triangle.b().x, a.triangle.b().y},
                     {a.triangle.c().x, a.triangle.c().y}};
  doc["key"] = {wide_json(a.key.p()), wide_json(a.key.q()), wide_json(a.key.r())};
  doc["achieved"] = {a.achieved.a(), a.achieved.b(), a.achieved.c()};
  doc["distance"] = a.distance;
  out << doc.dump(1) << '\n';
}

auto orbit_points(const WeightedShapeSet &s) -> std::vector<WeightedPlanePoint> {
  std::vector<WeightedPlanePoint> points;
  for (const auto &e : s.entries())
    for (const LabeledTriple &t : s3_orbit(shape_of(e.key))) points.push_back({t.a(), t.b(), e.weight});
  return points;
}

auto sample_points(std::uint64_t samples, std::uint64_t seed) -> std::vector<WeightedPlanePoint> {
  if (samples < 1) throw GuardError("sample_points: samples must be positive");
  std::vector<WeightedPlanePoint> points;
  points.reserve(6 * samples);
  for (std::uint64_t c = 0; c * kSamplesPerChunk < samples; ++c) {
    Stream stream(seed, c);
    for (std::uint64_t i = 0, n = std::min(kSamplesPerChunk, samples - c * kSamplesPerChunk); i < n; ++i) {
      const ShapeTriple s = triangle_shape(draw_triangle(stream));
      const std::array<double, 3> side{s.a(), s.b(), s.c()};
      constexpr int kLabellings[6][2] = {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}};
      for (const auto &l : kLabellings) points.push_back({side[l[0]], side[l[1]], 1});
    }
  }
  return points;
}

namespace {

constexpr double kCanvas = 520.0;
constexpr double kMargin = 40.0;
constexpr double kPlot = kCanvas - 2 * kMargin;

auto px(double a) -> std::string { return fixed3(kMargin + a * kPlot); }
auto py(double b) -> std::string { return fixed3(kCanvas - kMargin - b * kPlot); }

void svg_open(std::ostream &out, double width, double height) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fixed3(width) << "\" height=\""
      << fixed3(height) << "\" viewBox=\"0 0 " << fixed3(width) << ' ' << fixed3(height) << "\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << fixed3(width) << "\" height=\"" << fixed3(height)
      << "\" fill=\"white\"/>\n";
}

void segment(std::ostream &out, double a0, double b0, double a1, double b1, const char *cls) {
  out << "<line class=\"" << cls << "\" x1=\"" << px(a0) << "\" y1=\"" << py(b0) << "\" x2=\"" << px(a1) << "\" y2=\""
      << py(b1) << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
}

} // namespace

void plot_shapes(std::span<const WeightedPlanePoint> points, std::ostream &out) {
  if (points.empty()) throw GuardError("plot_shapes: no points");
  std::uint64_t heaviest = 1;
  for (const auto &p : points) heaviest = std::max(heaviest, p.weight);

  svg_open(out, kCanvas, kCanvas);
  out << "<polygon class=\"region\" points=\"" << px(1) << ',' << py(0) << ' ' << px(0) << ',' << py(1) << ' ' << px(1)
      << ',' << py(1) << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
  // isosceles loci a = b, a = c, b = c
  segment(out, 0.5, 0.5, 1, 1, "isosceles");
  segment(out, 0.5, 1, 1, 0, "isosceles");
  segment(out, 1, 0.5, 0, 1, "isosceles");
  out << "<g fill=\"#1f77b4\" stroke=\"none\">\n";
  for (const auto &p : points) {
    const double opacity = 0.15 + 0.6 * static_cast<double>(p.weight) / static_cast<double>(heaviest);
    out << "<circle class=\"pt\" cx=\"" << px(p.a) << "\" cy=\"" << py(p.b) << "\" r=\"1.5\" fill-opacity=\""
        << fixed3(opacity) << "\"/>\n";
  }
  out << "</g>\n";
  out << "<circle class=\"equilateral\" cx=\"" << px(2.0 / 3.0) << "\" cy=\"" << py(2.0 / 3.0)
      << "\" r=\"4\" fill=\"none\" stroke=\"red\" stroke-width=\"1.5\"/>\n";
  out << "<text x=\"" << fixed3(kCanvas / 2) << "\" y=\"" << fixed3(kCanvas - 10)
      << "\" text-anchor=\"middle\" font-size=\"12\">a</text>\n"
      << "<text x=\"12\" y=\"" << fixed3(kCanvas / 2) << "\" font-size=\"12\">b</text>\n";
  out << "</svg>\n";
}

void plot_curve(std::span<const ObtuseCurvePoint> curve, std::ostream &out) {
  if (curve.empty()) throw GuardError("plot_curve: no points");
  const double langford = langford_obtuse_probability();
  const double uniform = uniform_target(ModuliRegion::ObtuseAll);

  double y_lo = 0.5, y_hi = 0.8;
  for (const auto &p : curve) {
    y_lo = std::min({y_lo, p.weighted_fraction, p.distinct_fraction});
    y_hi = std::max({y_hi, p.weighted_fraction, p.distinct_fraction});
  }
  const double n_lo = static_cast<double>(curve.front().n);
  const double n_hi = static_cast<double>(curve.back().n);
  const double width = 640.0, height = 400.0, left = 60.0, right = 20.0, top = 20.0, bottom = 50.0;
  const auto x_of = [&](double n) {
    return n_hi == n_lo ? left + (width - left - right) / 2 : left + (n - n_lo) / (n_hi - n_lo) * (width - left - right);
  };
  const auto y_of = [&](double f) { return height - bottom - (f - y_lo) / (y_hi - y_lo) * (height - top - bottom); };

  svg_open(out, width, height);
  out << "<line class=\"axis\" x1=\"" << fixed3(left) << "\" y1=\"" << fixed3(height - bottom) << "\" x2=\""
      << fixed3(width - right) << "\" y2=\"" << fixed3(height - bottom) << "\" stroke=\"black\"/>\n"
      << "<line class=\"axis\" x1=\"" << fixed3(left) << "\" y1=\"" << fixed3(top) << "\" x2=\"" << fixed3(left)
      << "\" y2=\"" << fixed3(height - bottom) << "\" stroke=\"black\"/>\n";
  for (const auto &p : curve)
    out << "<text class=\"tick\" x=\"" << fixed3(x_of(static_cast<double>(p.n))) << "\" y=\""
        << fixed3(height - bottom + 16) << "\" text-anchor=\"middle\" font-size=\"10\">" << p.n << "</text>\n";
  for (const auto &[level, cls] : {std::pair{langford, "ref-langford"}, std::pair{uniform, "ref-uniform"}})
    out << "<line class=\"" << cls << "\" x1=\"" << fixed3(left) << "\" y1=\"" << fixed3(y_of(level)) << "\" x2=\""
        << fixed3(width - right) << "\" y2=\"" << fixed3(y_of(level))
        << "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n"
        << "<text x=\"" << fixed3(width - right) << "\" y=\"" << fixed3(y_of(level) - 4)
        << "\" text-anchor=\"end\" font-size=\"10\">" << format_double(level) << "</text>\n";

  const auto series = [&](const char *cls, const char *color, auto value) {
    if (curve.size() > 1) {
      out << "<polyline class=\"" << cls << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
      for (std::size_t i = 0; i < curve.size(); ++i)
        out << (i ? " " : "") << fixed3(x_of(static_cast<double>(curve[i].n))) << ',' << fixed3(y_of(value(curve[i])));
      out << "\"/>\n";
    }
    for (const auto &p : curve)
      out << "<circle class=\"" << cls << "-pt\" cx=\"" << fixed3(x_of(static_cast<double>(p.n))) << "\" cy=\""
          << fixed3(y_of(value(p))) << "\" r=\"2.5\" fill=\"" << color << "\"/>\n";
  };
  series("weighted", "#1f77b4", [](const ObtuseCurvePoint &p) { return p.weighted_fraction; });
  series("distinct", "#ff7f0e", [](const ObtuseCurvePoint &p) { return p.distinct_fraction; });
  out << "<text x=\"" << fixed3(width / 2) << "\" y=\"" << fixed3(height - 10)
      << "\" text-anchor=\"middle\" font-size=\"12\">N</text>\n";
  out << "</svg>\n";
}

void write_file(const std::filesystem::path &path, const std::function<void(std::ostream &)> &write) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  write(out);
  out.flush();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

} // namespace trimoduli
