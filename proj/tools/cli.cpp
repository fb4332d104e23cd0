#include "cli.hpp"

#include "trimoduli/analysis.hpp"
#include "trimoduli/diophantine.hpp"
#include "trimoduli/enumeration.hpp"
#include "trimoduli/error.hpp"
#include "trimoduli/io.hpp"
#include "trimoduli/randgeom.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>

namespace trimoduli::cli {

namespace {

struct CommandInfo {
  Command command;
  const char *name;
  const char *help;
  std::vector<Format> formats; ///< first entry is the default
};

const std::vector<CommandInfo> &commands() {
  static const std::vector<CommandInfo> table = {
      {Command::Enumerate, "enumerate", "Census of lattice triangles in [-n,n]^2 by similarity class",
       {Format::Csv, Format::Json}},
      {Command::Curve, "curve", "Obtuse fractions (weighted and distinct) for n = 2..n-max",
       {Format::Csv, Format::Json}},
      {Command::Report, "report", "Obtuse share at n against the uniform and random-triangle predictions",
       {Format::Json, Format::Csv}},
      {Command::Approx, "approx", "Lattice triangle within eps of a target shape", {Format::Json, Format::Csv}},
      {Command::McObtuse, "mc-obtuse", "Monte Carlo obtuse probability in the unit square",
       {Format::Json, Format::Csv}},
      {Command::McDistance, "mc-distance", "Monte Carlo mean distance of two points in the unit square",
       {Format::Json, Format::Csv}},
      {Command::Hist, "hist", "Histogram of random triangle shapes over the ab-plane", {Format::Csv, Format::Json}},
      {Command::PlotShapes, "plot-shapes", "SVG scatter of shapes in the ab-plane", {Format::Svg}},
      {Command::PlotCurve, "plot-curve", "SVG chart of obtuse fractions against n", {Format::Svg}},
  };
  return table;
}

auto info_of(Command c) -> const CommandInfo & {
  return *std::find_if(commands().begin(), commands().end(), [c](const CommandInfo &s) { return s.command == c; });
}

const std::map<std::string, Format> kFormats = {{"csv", Format::Csv}, {"json", Format::Json}, {"svg", Format::Svg}};

void emit(const RunConfig &config, std::ostream &out, const std::function<void(std::ostream &)> &write) {
  if (config.out_path.empty()) {
    write(out);
    out.flush();
  } else {
    write_file(config.out_path, write);
  }
}

} // namespace

auto command_name(Command c) -> std::string_view { return info_of(c).name; }

auto parse_args(const std::vector<std::string> &args, std::ostream &out) -> std::optional<RunConfig> {
  RunConfig config;
  std::string format;
  std::map<Command, CLI::App *> subs;

  CLI::App app{"Lattice triangles in the moduli space of triangles", "trimoduli"};
  app.require_subcommand(1);
  for (const CommandInfo &info : commands()) {
    CLI::App *sub = app.add_subcommand(info.name, info.help);
    subs[info.command] = sub;
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json", "svg"}));
    sub->add_option("--out", config.out_path, "Output file (default: stdout)");
    switch (info.command) {
    case Command::Enumerate:
      sub->add_option("--n", config.n, "Half-width of the square")->required();
      break;
    case Command::Report:
      sub->add_option("--n", config.n, "Half-width of the square")->required();
      break;
    case Command::Curve:
    case Command::PlotCurve:
      sub->add_option("--n-max", config.n_max, "Largest half-width")->required();
      break;
    case Command::Approx:
      sub->add_option("--a", config.a, "Target side a")->required();
      sub->add_option("--b", config.b, "Target side b")->required();
      sub->add_option("--c", config.c, "Target side c")->required();
      sub->add_option("--eps", config.eps, "Shape-space tolerance")->required();
      break;
    case Command::McObtuse:
    case Command::McDistance:
      sub->add_option("--samples", config.samples, "Number of samples")->required();
      sub->add_option("--seed", config.seed, "Random seed")->capture_default_str();
      break;
    case Command::Hist:
      sub->add_option("--samples", config.samples, "Number of random triangles")->required();
      sub->add_option("--bins", config.bins, "Cells per axis")->capture_default_str();
      sub->add_option("--seed", config.seed, "Random seed")->capture_default_str();
      sub->add_flag("--sorted", config.sorted, "Record only the sorted representative");
      break;
    case Command::PlotShapes: {
      auto *n_opt = sub->add_option("--n", config.n, "Plot the labelled census of [-n,n]^2");
      auto *s_opt = sub->add_option("--samples", config.samples, "Plot random triangles instead");
      n_opt->excludes(s_opt);
      sub->add_option("--seed", config.seed, "Random seed")->capture_default_str();
      break;
    }
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success &) {
    out << app.help();
    for (const auto &[command, sub] : subs)
      if (sub->parsed()) out << sub->help();
    return std::nullopt;
  } catch (const CLI::ParseError &e) {
    throw UsageError(e.what());
  }

  for (const auto &[command, sub] : subs)
    if (sub->parsed()) config.command = command;
  const CommandInfo &info = info_of(config.command);
  config.format = info.formats.front();
  if (!format.empty()) {
    config.format = kFormats.at(format);
    if (std::find(info.formats.begin(), info.formats.end(), config.format) == info.formats.end())
      throw UsageError(std::string(info.name) + " does not support --format " + format);
  }
  if (config.command == Command::PlotShapes && subs[Command::PlotShapes]->count("--n") == 0 &&
      subs[Command::PlotShapes]->count("--samples") == 0)
    throw UsageError("plot-shapes needs --n or --samples");
  return config;
}

void run(const RunConfig &config, std::ostream &out) {
  const bool json = config.format == Format::Json;
  switch (config.command) {
  case Command::Enumerate: {
    const WeightedShapeSet s = enumerate_weighted(config.n);
    emit(config, out, [&](std::ostream &o) { json ? write_weighted_set_json(s, o) : write_weighted_set_csv(s, o); });
    return;
  }
  case Command::Curve: {
    const auto curve = obtuse_curve(config.n_max);
    emit(config, out, [&](std::ostream &o) { json ? write_curve_json(curve, o) : write_curve_csv(curve, o); });
    return;
  }
  case Command::Report: {
    const EquidistReport r = equidist_report(config.n);
    emit(config, out, [&](std::ostream &o) { json ? write_report_json(r, o) : write_report_csv(r, o); });
    return;
  }
  case Command::Approx: {
    // the flags are side lengths up to scale; normalize before approximating
    const ShapeTriple target = shape_from_lengths(config.a, config.b, config.c);
    const LatticeTriangle t = approximate_shape(target, config.eps);
    const ShapeApproximation a = describe_approximation(target, config.eps, t);
    emit(config, out, [&](std::ostream &o) { json ? write_approximation_json(a, o) : write_approximation_csv(a, o); });
    return;
  }
  case Command::McObtuse:
  case Command::McDistance: {
    const bool obtuse = config.command == Command::McObtuse;
    const McEstimate e =
        obtuse ? obtuse_probability(config.samples, config.seed) : mean_pair_distance(config.samples, config.seed);
    const std::string_view quantity = obtuse ? "obtuse_probability" : "mean_pair_distance";
    emit(config, out,
         [&](std::ostream &o) { json ? write_estimate_json(e, quantity, o) : write_estimate_csv(e, quantity, o); });
    return;
  }
  case Command::Hist: {
    const Histogram2D h = shape_histogram(config.samples, config.bins, config.seed,
                                          config.sorted ? HistogramMode::Sorted : HistogramMode::Labeled);
    emit(config, out, [&](std::ostream &o) { json ? write_histogram_json(h, o) : write_histogram_csv(h, o); });
    return;
  }
  case Command::PlotShapes: {
    const auto points = config.samples > 0 ? sample_points(config.samples, config.seed)
                                           : orbit_points(enumerate_weighted(config.n));
    emit(config, out, [&](std::ostream &o) { plot_shapes(points, o); });
    return;
  }
  case Command::PlotCurve: {
    const auto curve = obtuse_curve(config.n_max);
    emit(config, out, [&](std::ostream &o) { plot_curve(curve, o); });
    return;
  }
  }
}

auto main_entry(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) -> int {
  const auto fail = [&](const char *kind, const std::string &message, int status) {
    std::string line = message;
    std::replace(line.begin(), line.end(), '\n', ' ');
    err << "error: " << kind << ": " << line << '\n';
    return status;
  };
  try {
    const auto config = parse_args(args, out);
    if (!config) return kExitOk;
    run(*config, out);
    return kExitOk;
  } catch (const UsageError &e) {
    return fail("usage", e.what(), kExitUsage);
  } catch (const GuardError &e) {
    return fail("guard", e.what(), kExitGuard);
  } catch (const PrecisionError &e) {
    return fail("precision", e.what(), kExitPrecision);
  } catch (const IoError &e) {
    return fail("io", e.what(), kExitFailure);
  } catch (const std::exception &e) {
    return fail("internal", e.what(), kExitFailure);
  }
}

} // namespace trimoduli::cli
