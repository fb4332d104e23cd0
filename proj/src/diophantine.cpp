#include "trimoduli/diophantine.hpp"

#include "trimoduli/error.hpp"

#include <absl/container/flat_hash_map.h>

#include <algorithm>
#include <cmath>
#include <string>

namespace trimoduli {

namespace {

constexpr int kMaxHalvings = 20;

// {v}, kept strictly below 1 when rounding of v - floor(v) lands on 1.
auto fractional(double v) -> double { return std::min(v - std::floor(v), std::nextafter(1.0, 0.0)); }

auto box_index(double frac, std::int64_t boxes) -> std::int64_t {
  return std::min(static_cast<std::int64_t>(frac * static_cast<double>(boxes)), boxes - 1);
}

void require_finite(double v, const char *what) {
  if (!std::isfinite(v)) throw GuardError(std::string(what) + ": argument must be finite");
}

} // namespace

auto dirichlet_1d(double x, double eps) -> DirichletPair {
  require_finite(x, "dirichlet_1d");
  if (!(eps >= kMinDirichletEps)) throw GuardError("dirichlet_1d: eps must be at least 1e-9");
  const auto boxes = static_cast<std::int64_t>(std::ceil(1.0 / eps));
  std::vector<std::int64_t> first(static_cast<std::size_t>(boxes), -1);
  for (std::int64_t k = 0; k <= boxes; ++k) {
    const double kx = static_cast<double>(k) * x;
    auto &slot = first[static_cast<std::size_t>(box_index(fractional(kx), boxes))];
    if (slot < 0) {
      slot = k;
      continue;
    }
    const std::int64_t i = slot;
    const double ix = static_cast<double>(i) * x;
    const DirichletPair out{k - i, static_cast<std::int64_t>(std::floor(kx)) - static_cast<std::int64_t>(std::floor(ix))};
    if (!(std::abs(static_cast<double>(out.m) * x - static_cast<double>(out.n)) < eps))
      throw PrecisionError("dirichlet_1d: witness failed verification");
    return out;
  }
  throw PrecisionError("dirichlet_1d: no collision found");
}

auto dirichlet_2d(double x, double y, double eps) -> DirichletApproximant {
  require_finite(x, "dirichlet_2d");
  require_finite(y, "dirichlet_2d");
  if (!(eps >= kMinDirichletEps)) throw GuardError("dirichlet_2d: eps must be at least 1e-9");
  const auto boxes = static_cast<std::int64_t>(std::floor(1.0 / eps)) + 1;
  const std::int64_t last = boxes * boxes;

  absl::flat_hash_map<std::int64_t, std::int64_t> first;
  for (std::int64_t k = 0; k <= last; ++k) {
    const double kx = static_cast<double>(k) * x;
    const double ky = static_cast<double>(k) * y;
    const std::int64_t box = box_index(fractional(kx), boxes) * boxes + box_index(fractional(ky), boxes);
    const auto [it, inserted] = first.try_emplace(box, k);
    if (inserted) continue;

    const std::int64_t i = it->second;
    const double ix = static_cast<double>(i) * x;
    const double iy = static_cast<double>(i) * y;
    DirichletApproximant out{};
    out.m = k - i;
    out.nx = static_cast<std::int64_t>(std::floor(kx)) - static_cast<std::int64_t>(std::floor(ix));
    out.ny = static_cast<std::int64_t>(std::floor(ky)) - static_cast<std::int64_t>(std::floor(iy));
    out.err_x = std::abs(static_cast<double>(out.m) * x - static_cast<double>(out.nx));
    out.err_y = std::abs(static_cast<double>(out.m) * y - static_cast<double>(out.ny));
    if (!(out.err_x < eps && out.err_y < eps))
      throw PrecisionError("dirichlet_2d: witness failed verification");
    return out;
  }
  throw PrecisionError("dirichlet_2d: no collision found");
}

auto approximate_shape(const ShapeTriple &target, double eps) -> LatticeTriangle {
  if (!(eps >= kMinShapeEps)) throw GuardError("approximate_shape: eps must be at least 1e-6");
  const Vector2<double> apex = shape_to_vertex(target);
  double delta = eps;
  for (int attempt = 0; attempt <= kMaxHalvings && delta >= kMinDirichletEps; ++attempt, delta /= 2) {
    const DirichletApproximant d = dirichlet_2d(apex.x(), apex.y(), delta);
    const LatticePoint a{0, 0}, b{d.m, 0}, c{d.nx, d.ny};
    const LatticePoint candidate[] = {a, b, c};
    if (!std::all_of(std::begin(candidate), std::end(candidate), fits_coordinate_width) || is_collinear(a, b, c))
      continue;
    LatticeTriangle t(a, b, c);
    if (shape_distance(shape_of(similarity_key(t)), target) < eps) return t;
  }
  throw PrecisionError("approximate_shape: no verified approximant after " + std::to_string(kMaxHalvings) +
                       " halvings");
}

auto equilateral_approximant(double eps) -> LatticeTriangle {
  if (!(eps >= kMinShapeEps)) throw GuardError("equilateral_approximant: eps must be at least 1e-6");
  const DirichletPair d = dirichlet_1d(std::sqrt(3.0), eps);
  return LatticeTriangle({0, 0}, {2 * d.m, 0}, {d.m, d.n});
}

auto weyl_sequence(double x, std::size_t count) -> std::vector<double> {
  require_finite(x, "weyl_sequence");
  if (count == 0) throw GuardError("weyl_sequence: count must be positive");
  std::vector<double> seq(count);
  for (std::size_t k = 1; k <= count; ++k) seq[k - 1] = fractional(static_cast<double>(k) * x);
  return seq;
}

auto star_discrepancy(std::span<const double> seq) -> double {
  if (seq.empty()) throw GuardError("star_discrepancy: empty sequence");
  std::vector<double> sorted(seq.begin(), seq.end());
  for (const double v : sorted)
    if (!(v >= 0.0 && v < 1.0)) throw GuardError("star_discrepancy: values must lie in [0,1)");
  std::sort(sorted.begin(), sorted.end());
  const auto n = static_cast<double>(sorted.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double rank = static_cast<double>(i + 1);
    worst = std::max({worst, rank / n - sorted[i], sorted[i] - (rank - 1) / n});
  }
  return worst;
}

} // namespace trimoduli
