#include "trimoduli/enumeration.hpp"

#include "trimoduli/error.hpp"
#include "trimoduli/parallel.hpp"

#include <absl/container/flat_hash_map.h>

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

namespace trimoduli {

namespace {

using Accumulator = absl::flat_hash_map<std::uint64_t, std::uint64_t>;

constexpr int kFieldBits = 21;
constexpr std::uint64_t kFieldMask = (std::uint64_t{1} << kFieldBits) - 1;

// p and q are strictly below 2^21 and r is at most 2^21 for n <= 512, so r
// takes the top 22 bits.
constexpr auto pack(std::uint64_t p, std::uint64_t q, std::uint64_t r) -> std::uint64_t {
  return (r << (2 * kFieldBits)) | (q << kFieldBits) | p;
}

auto unpack(std::uint64_t packed) -> SimilarityKey {
  return SimilarityKey::from_sides(packed & kFieldMask, (packed >> kFieldBits) & kFieldMask,
                                   packed >> (2 * kFieldBits));
}

inline void sort3(std::uint64_t &a, std::uint64_t &b, std::uint64_t &c) {
  if (a > b) std::swap(a, b);
  if (b > c) std::swap(b, c);
  if (a > b) std::swap(a, b);
}

void accumulate_anchor(std::int64_t ux, std::int64_t uy, std::int64_t n, IterationOrder order, Accumulator &acc) {
  const std::int64_t span = 2 * n;
  const std::int64_t side = span + 1;
  // v ranges that keep the bounding box of {0, u, v} inside the square
  const std::int64_t x_lo = std::max<std::int64_t>(ux, 0) - span;
  const std::int64_t x_hi = std::min<std::int64_t>(ux, 0) + span;
  const std::int64_t y_lo = std::max<std::int64_t>(uy, 0) - span;
  const std::int64_t y_hi = std::min<std::int64_t>(uy, 0) + span;
  const std::uint64_t p_raw = static_cast<std::uint64_t>(ux * ux + uy * uy);
  const bool ascending = order == IterationOrder::Ascending;

  for (std::int64_t i = 0; i <= x_hi - x_lo; ++i) {
    const std::int64_t vx = ascending ? x_lo + i : x_hi - i;
    const std::int64_t w = std::max<std::int64_t>({0, ux, vx}) - std::min<std::int64_t>({0, ux, vx});
    const std::uint64_t w_room = static_cast<std::uint64_t>(side - w);
    const std::int64_t dx = ux - vx;
    for (std::int64_t j = 0; j <= y_hi - y_lo; ++j) {
      const std::int64_t vy = ascending ? y_lo + j : y_hi - j;
      if (ux * vy == uy * vx) continue; // covers v = 0, v = u and collinear
      const std::int64_t h = std::max<std::int64_t>({0, uy, vy}) - std::min<std::int64_t>({0, uy, vy});
      const std::int64_t dy = uy - vy;
      std::uint64_t p = p_raw;
      std::uint64_t q = static_cast<std::uint64_t>(vx * vx + vy * vy);
      std::uint64_t r = static_cast<std::uint64_t>(dx * dx + dy * dy);
      std::uint64_t g = std::gcd(p, q);
      if (g != 1) {
        g = std::gcd(g, r);
        p /= g;
        q /= g;
        r /= g;
      }
      sort3(p, q, r);
      acc[pack(p, q, r)] += w_room * static_cast<std::uint64_t>(side - h);
    }
  }
}

auto finalize(const Accumulator &totals) -> WeightedShapeSet {
  std::vector<WeightedShapeSet::Entry> entries;
  entries.reserve(totals.size());
  for (const auto &[packed, ordered_count] : totals) {
    if (ordered_count % 6 != 0) {
      const SimilarityKey k = unpack(packed);
      throw EnumerationError("enumerate_weighted: ordered-pair total " + std::to_string(ordered_count) +
                             " for key (" + to_string(k.p()) + "," + to_string(k.q()) + "," + to_string(k.r()) +
                             ") is not divisible by 6");
    }
    entries.push_back({unpack(packed), ordered_count / 6});
  }
  return WeightedShapeSet::from_entries(std::move(entries));
}

} // namespace

auto enumerate_weighted(std::int64_t n, IterationOrder order) -> WeightedShapeSet {
  if (n < 1 || n > kMaxEnumerationHalfWidth)
    throw GuardError("enumerate_weighted: n must lie in [1, " + std::to_string(kMaxEnumerationHalfWidth) + "], got " +
                     std::to_string(n));
  const std::int64_t span = 2 * n;
  const std::int64_t side = 2 * span + 1;
  const auto anchors = static_cast<std::size_t>(side);

  // One task per u.x column; each worker owns its accumulator.
  const std::size_t workers = std::min(worker_count(), anchors);
  std::vector<Accumulator> partial(workers);
  parallel_for(anchors, workers, [&](std::size_t task, std::size_t worker) {
    const auto offset = static_cast<std::int64_t>(task);
    const std::int64_t ux = order == IterationOrder::Ascending ? offset - span : span - offset;
    for (std::int64_t k = 0; k < side; ++k) {
      const std::int64_t uy = order == IterationOrder::Ascending ? k - span : span - k;
      if (ux == 0 && uy == 0) continue;
      accumulate_anchor(ux, uy, n, order, partial[worker]);
    }
  });

  Accumulator &merged = partial.front();
  for (std::size_t w = 1; w < partial.size(); ++w) {
    for (const auto &[packed, count] : partial[w]) merged[packed] += count;
    Accumulator{}.swap(partial[w]);
  }
  return finalize(merged);
}

auto enumerate_naive(const LatticeBox &box) -> WeightedShapeSet {
  if (box.x_max < box.x_min || box.y_max < box.y_min) throw GuardError("enumerate_naive: empty box");
  const std::int64_t width = box.x_max - box.x_min + 1;
  const std::int64_t height = box.y_max - box.y_min + 1;
  if (width > 400 || height > 400 || width * height > 400)
    throw GuardError("enumerate_naive: box holds more than 400 lattice points");

  std::vector<LatticePoint> points;
  for (std::int64_t x = box.x_min; x <= box.x_max; ++x)
    for (std::int64_t y = box.y_min; y <= box.y_max; ++y) points.push_back({x, y});

  std::vector<WeightedShapeSet::Entry> entries;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      for (std::size_t k = j + 1; k < points.size(); ++k) {
        if (is_collinear(points[i], points[j], points[k])) continue;
        entries.push_back({similarity_key(LatticeTriangle(points[i], points[j], points[k])), 1});
      }
  return WeightedShapeSet::from_entries(std::move(entries));
}

auto distinct_classes(std::int64_t n) -> std::vector<SimilarityKey> {
  const WeightedShapeSet s = enumerate_weighted(n);
  std::vector<SimilarityKey> keys;
  keys.reserve(s.size());
  for (const auto &e : s.entries()) keys.push_back(e.key);
  return keys;
}

} // namespace trimoduli
