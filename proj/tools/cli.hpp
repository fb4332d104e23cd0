#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace trimoduli::cli {

enum class Command { Enumerate, Curve, Report, Approx, McObtuse, McDistance, Hist, PlotShapes, PlotCurve };
enum class Format { Csv, Json, Svg };

/// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitGuard = 3;
inline constexpr int kExitPrecision = 4;

/// Bad flags or flag combinations.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  Command command = Command::Enumerate;
  std::int64_t n = 0;
  std::int64_t n_max = 0;
  double eps = 0.0;
  std::uint64_t samples = 0;
  int bins = 64;
  std::uint64_t seed = 42;
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  bool sorted = false;
  std::string out_path; ///< empty means stdout
  Format format = Format::Csv;
};

auto command_name(Command c) -> std::string_view;

/// Parses arguments (without the program name). Throws UsageError; returns
/// nullopt after printing help to `out` when --help was requested.
auto parse_args(const std::vector<std::string> &args, std::ostream &out) -> std::optional<RunConfig>;

/// Executes a validated configuration, writing to out_path or `out`.
/// Library errors propagate.
void run(const RunConfig &config, std::ostream &out);

/// Full front end: parse, run, map errors to a one-line
/// "error: <kind>: <message>" on `err` and to an exit status.
auto main_entry(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) -> int;

} // namespace trimoduli::cli
