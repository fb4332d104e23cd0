#include "trimoduli/randgeom.hpp"

#include "trimoduli/error.hpp"
#include "trimoduli/parallel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

namespace trimoduli {

namespace {

constexpr std::uint64_t kMinSamples = 1000;

struct SortedSquares {
  double p;
  double q;
  double r;
};

auto sorted_squares(const UnitSquareTriangle &t) -> SortedSquares {
  std::array<double, 3> s{(t.b - t.a).squaredNorm(), (t.c - t.b).squaredNorm(), (t.a - t.c).squaredNorm()};
  std::sort(s.begin(), s.end());
  return {s[0], s[1], s[2]};
}

auto sorted_lengths(const UnitSquareTriangle &t) -> std::array<double, 3> {
  std::array<double, 3> l{(t.b - t.a).norm(), (t.c - t.b).norm(), (t.a - t.c).norm()};
  std::sort(l.begin(), l.end());
  return l;
}

auto is_obtuse(const UnitSquareTriangle &t) -> bool {
  const SortedSquares s = sorted_squares(t);
  return s.r > s.p + s.q + kObtuseMargin;
}

/// Running mean and sum of squared deviations, merged in a fixed order.
struct Moments {
  double count = 0;
  double mean = 0;
  double m2 = 0;

  void add(double x) {
    count += 1;
    const double delta = x - mean;
    mean += delta / count;
    m2 += delta * (x - mean);
  }

  void merge(const Moments &o) {
    if (o.count == 0) return;
    const double total = count + o.count;
    const double delta = o.mean - mean;
    mean += delta * o.count / total;
    m2 += o.m2 + delta * delta * count * o.count / total;
    count = total;
  }
};

auto chunk_count(std::uint64_t samples) -> std::uint64_t { return (samples + kSamplesPerChunk - 1) / kSamplesPerChunk; }

auto chunk_size(std::uint64_t chunk, std::uint64_t samples) -> std::uint64_t {
  return std::min(kSamplesPerChunk, samples - chunk * kSamplesPerChunk);
}

void require_samples(std::uint64_t samples, const char *what) {
  if (samples < kMinSamples) throw GuardError(std::string(what) + ": needs at least 1000 samples");
}

/// Runs per-chunk accumulation in parallel and merges chunks in index order.
template <typename Fn> auto chunked_moments(std::uint64_t samples, std::uint64_t seed, Fn &&per_sample) -> Moments {
  const std::uint64_t chunks = chunk_count(samples);
  std::vector<Moments> partial(chunks);
  parallel_for(chunks, worker_count(), [&](std::size_t c, std::size_t) {
    Stream stream(seed, c);
    Moments m;
    for (std::uint64_t i = 0, n = chunk_size(c, samples); i < n; ++i) m.add(per_sample(stream));
    partial[c] = m;
  });
  Moments all;
  for (const Moments &m : partial) all.merge(m);
  return all;
}

auto to_estimate(const Moments &m, std::uint64_t samples, std::uint64_t seed) -> McEstimate {
  const double variance = m.m2 / (m.count - 1);
  return {m.mean, std::sqrt(variance / m.count), samples, seed};
}

} // namespace

auto draw_triangle(Stream &stream) -> UnitSquareTriangle {
  for (;;) {
    UnitSquareTriangle t;
    t.a = {stream.uniform(), stream.uniform()};
    t.b = {stream.uniform(), stream.uniform()};
    t.c = {stream.uniform(), stream.uniform()};
    const Vector2<double> e1 = t.b - t.a;
    const Vector2<double> e2 = t.c - t.a;
    if (e1.x() * e2.y() - e1.y() * e2.x() == 0.0) continue;
    // Rounding can still flatten an extremely thin triangle; redraw those too.
    try {
      (void)triangle_shape(t);
    } catch (const GuardError &) {
      continue;
    }
    return t;
  }
}

auto triangle_shape(const UnitSquareTriangle &t) -> ShapeTriple {
  const auto l = sorted_lengths(t);
  return shape_from_lengths(l[0], l[1], l[2]);
}

auto obtuse_probability(std::uint64_t samples, std::uint64_t seed) -> McEstimate {
  require_samples(samples, "obtuse_probability");
  const std::uint64_t chunks = chunk_count(samples);
  std::vector<std::uint64_t> hits(chunks, 0);
  parallel_for(chunks, worker_count(), [&](std::size_t c, std::size_t) {
    Stream stream(seed, c);
    std::uint64_t k = 0;
    for (std::uint64_t i = 0, n = chunk_size(c, samples); i < n; ++i) k += is_obtuse(draw_triangle(stream)) ? 1 : 0;
    hits[c] = k;
  });
  std::uint64_t obtuse = 0;
  for (const std::uint64_t k : hits) obtuse += k;

  const auto n = static_cast<double>(samples);
  const double mean = static_cast<double>(obtuse) / n;
  const double variance = mean * (1.0 - mean) * n / (n - 1.0);
  return {mean, std::sqrt(variance / n), samples, seed};
}

auto mean_pair_distance(std::uint64_t samples, std::uint64_t seed) -> McEstimate {
  require_samples(samples, "mean_pair_distance");
  const Moments m = chunked_moments(samples, seed, [](Stream &stream) {
    const Vector2<double> a(stream.uniform(), stream.uniform());
    const Vector2<double> b(stream.uniform(), stream.uniform());
    return (a - b).norm();
  });
  return to_estimate(m, samples, seed);
}

auto shape_histogram(std::uint64_t samples, int bins, std::uint64_t seed, HistogramMode mode) -> Histogram2D {
  if (samples < 1) throw GuardError("shape_histogram: samples must be positive");
  if (bins < 2 || bins > 4096) throw GuardError("shape_histogram: bins must lie in [2, 4096]");
  using Counts = decltype(Histogram2D::counts);

  const std::uint64_t chunks = chunk_count(samples);
  const std::size_t workers = std::min<std::size_t>(worker_count(), chunks);
  std::vector<Counts> partial(workers, Counts::Zero(bins, bins));
  parallel_for(chunks, workers, [&](std::size_t c, std::size_t w) {
    Stream stream(seed, c);
    Counts &counts = partial[w];
    for (std::uint64_t i = 0, n = chunk_size(c, samples); i < n; ++i) {
      const ShapeTriple s = triangle_shape(draw_triangle(stream));
      if (mode == HistogramMode::Sorted) {
        ++counts(histogram_cell(s.a(), bins), histogram_cell(s.b(), bins));
        continue;
      }
      std::array<double, 3> perm{s.a(), s.b(), s.c()};
      // every labelling, repeats included, so each sample weighs 6
      constexpr int kLabellings[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
      for (const auto &l : kLabellings) ++counts(histogram_cell(perm[l[0]], bins), histogram_cell(perm[l[1]], bins));
    }
  });

  Histogram2D h;
  h.bins = bins;
  h.counts = Counts::Zero(bins, bins);
  for (const Counts &c : partial) h.counts += c;
  h.total = h.counts.sum();
  return h;
}

auto obtuse_mass_fraction(const Histogram2D &h) -> double {
  if (h.total == 0) throw GuardError("obtuse_mass_fraction: empty histogram");
  std::int64_t obtuse = 0;
  for (int i = 0; i < h.bins; ++i)
    for (int j = 0; j < h.bins; ++j) {
      if (h.counts(i, j) == 0) continue;
      const double a = (i + 0.5) / h.bins;
      const double b = (j + 0.5) / h.bins;
      const double c = 2.0 - a - b;
      const double largest = std::max({a, b, c});
      if (2 * largest * largest > a * a + b * b + c * c) obtuse += h.counts(i, j);
    }
  return static_cast<double>(obtuse) / static_cast<double>(h.total);
}

} // namespace trimoduli
