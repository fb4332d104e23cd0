#pragma once

#include "trimoduli/lattice.hpp"
#include "trimoduli/moduli.hpp"

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

namespace trimoduli {

/// Smallest tolerance accepted by the pigeonhole searches.
inline constexpr double kMinDirichletEps = 1e-9;
inline constexpr double kMinShapeEps = 1e-6;

struct DirichletPair {
  std::int64_t m;
  std::int64_t n;
};

/// Witness that m * (x, y) lies within the requested eps of (nx, ny) in
/// each coordinate.
struct DirichletApproximant {
  std::int64_t m;
  std::int64_t nx;
  std::int64_t ny;
  double err_x;
  double err_y;
};

/// Finds m >= 1 and n with |m x - n| < eps by scanning the fractional parts
/// {k x}, k = 0..ceil(1/eps), into ceil(1/eps) boxes until two share a box.
auto dirichlet_1d(double x, double eps) -> DirichletPair;

/// Simultaneous version: B = floor(1/eps) + 1 boxes per axis, points
/// ({k x}, {k y}) for k = 0..B^2, first pair i < j in a common box gives
/// M = j - i. The returned witness is re-verified in double precision and a
/// failed check throws PrecisionError. Memory grows with the number of points
/// visited before the first collision.
auto dirichlet_2d(double x, double y, double eps) -> DirichletApproximant;

/// Apex (x, y), y > 0, of the triangle (0,0), (1,0), (x,y) whose sorted
/// normalized sides equal the shape. The largest side lies on the base.
template <typename Scalar = double> auto shape_to_vertex(const BasicShapeTriple<Scalar> &t) -> Vector2<Scalar> {
  using std::sqrt;
  const Scalar to_apex_from_b = t.a() / t.c();
  const Scalar to_apex_from_a = t.b() / t.c();
  const Scalar x = (1 + to_apex_from_a * to_apex_from_a - to_apex_from_b * to_apex_from_b) / 2;
  Scalar y2 = to_apex_from_a * to_apex_from_a - x * x;
  if (y2 <= 0) throw GuardError("shape_to_vertex: triple is degenerate");
  return Vector2<Scalar>(x, sqrt(y2));
}

/// A lattice triangle (0,0), (M,0), (Nx,Ny) whose shape lies within eps of
/// the target, verified through its exact similarity key. The vertex
/// tolerance starts at eps and is halved (at most 20 times) until the check
/// passes; otherwise throws PrecisionError.
auto approximate_shape(const ShapeTriple &target, double eps) -> LatticeTriangle;

/// (0,0), (2M,0), (M,N) with |M sqrt(3) - N| < eps.
auto equilateral_approximant(double eps) -> LatticeTriangle;

/// ({1 x}, {2 x}, ..., {count x}).
auto weyl_sequence(double x, std::size_t count) -> std::vector<double>;

/// Exact star discrepancy of a finite sequence in [0,1).
auto star_discrepancy(std::span<const double> seq) -> double;

} // namespace trimoduli
