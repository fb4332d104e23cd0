#pragma once

#include "trimoduli/error.hpp"
#include "trimoduli/lattice.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <string_view>
#include <vector>

namespace trimoduli {

template <typename Scalar> using Vector3 = Eigen::Matrix<Scalar, 3, 1>;
template <typename Scalar> using Vector2 = Eigen::Matrix<Scalar, 2, 1>;

/// Tolerance on a + b + c = 2 for real triples.
inline constexpr double kSumTolerance = 1e-12;
/// Margin below which a real obtuse/acute test defers to exact integer data.
inline constexpr double kClassificationMargin = 1e-9;

/// A point of moduli space: normalized side lengths 0 < a <= b <= c < 1 with
/// a + b + c = 2.
template <typename Scalar = double> class BasicShapeTriple {
public:
  /// Throws GuardError unless the triple is sorted, inside (0,1) and sums to 2.
  static auto from_sorted(Scalar a, Scalar b, Scalar c) -> BasicShapeTriple {
    if (!(a > 0 && a <= b && b <= c && c < 1))
      throw GuardError("shape triple: need 0 < a <= b <= c < 1");
    if (std::abs(static_cast<double>(a + b + c - 2)) > kSumTolerance)
      throw GuardError("shape triple: a + b + c must equal 2");
    return BasicShapeTriple(Vector3<Scalar>(a, b, c));
  }

  [[nodiscard]] auto a() const -> Scalar { return v_(0); }
  [[nodiscard]] auto b() const -> Scalar { return v_(1); }
  [[nodiscard]] auto c() const -> Scalar { return v_(2); }
  [[nodiscard]] auto vec() const -> const Vector3<Scalar> & { return v_; }

private:
  explicit BasicShapeTriple(const Vector3<Scalar> &v) : v_(v) {}
  Vector3<Scalar> v_;
};

/// A point of Teichmueller space: normalized side lengths in a fixed edge
/// labelling, each below 1, summing to 2.
template <typename Scalar = double> class BasicLabeledTriple {
public:
  static auto make(Scalar a, Scalar b, Scalar c) -> BasicLabeledTriple {
    if (!(a > 0 && b > 0 && c > 0 && a < 1 && b < 1 && c < 1))
      throw GuardError("labeled triple: sides must lie in (0,1)");
    if (std::abs(static_cast<double>(a + b + c - 2)) > kSumTolerance)
      throw GuardError("labeled triple: a + b + c must equal 2");
    return BasicLabeledTriple(Vector3<Scalar>(a, b, c));
  }

  [[nodiscard]] auto a() const -> Scalar { return v_(0); }
  [[nodiscard]] auto b() const -> Scalar { return v_(1); }
  [[nodiscard]] auto c() const -> Scalar { return v_(2); }
  [[nodiscard]] auto vec() const -> const Vector3<Scalar> & { return v_; }

  friend auto operator==(const BasicLabeledTriple &x, const BasicLabeledTriple &y) -> bool {
    return x.v_ == y.v_;
  }

private:
  explicit BasicLabeledTriple(const Vector3<Scalar> &v) : v_(v) {}
  Vector3<Scalar> v_;
};

/// ab-plane coordinates of a labeled triple (c = 2 - a - b implied).
template <typename Scalar = double> class BasicPlanePoint {
public:
  static auto make(Scalar a, Scalar b) -> BasicPlanePoint {
    if (!(a < 1 && b < 1 && a + b > 1)) throw GuardError("plane point: need a, b < 1 and a + b > 1");
    return BasicPlanePoint(Vector2<Scalar>(a, b));
  }

  [[nodiscard]] auto a() const -> Scalar { return v_(0); }
  [[nodiscard]] auto b() const -> Scalar { return v_(1); }
  [[nodiscard]] auto vec() const -> const Vector2<Scalar> & { return v_; }

private:
  explicit BasicPlanePoint(const Vector2<Scalar> &v) : v_(v) {}
  Vector2<Scalar> v_;
};

using ShapeTriple = BasicShapeTriple<double>;
using LabeledTriple = BasicLabeledTriple<double>;
using PlanePoint = BasicPlanePoint<double>;

/// Normalizes three positive side lengths by their semi-perimeter and sorts.
template <typename Scalar>
auto shape_from_lengths(Scalar l0, Scalar l1, Scalar l2) -> BasicShapeTriple<Scalar> {
  Vector3<Scalar> v(l0, l1, l2);
  std::sort(v.data(), v.data() + 3);
  const Scalar semi = v.sum() / 2;
  v /= semi;
  return BasicShapeTriple<Scalar>::from_sorted(v(0), v(1), v(2));
}

/// The moduli-space point of a similarity class.
template <typename Scalar = double> auto shape_of(const SimilarityKey &k) -> BasicShapeTriple<Scalar> {
  using std::sqrt;
  return shape_from_lengths<Scalar>(sqrt(static_cast<Scalar>(k.p())), sqrt(static_cast<Scalar>(k.q())),
                                    sqrt(static_cast<Scalar>(k.r())));
}

template <typename Scalar>
auto shape_distance(const BasicShapeTriple<Scalar> &x, const BasicShapeTriple<Scalar> &y) -> Scalar {
  return (x.vec() - y.vec()).norm();
}

template <typename Scalar> auto to_plane(const BasicLabeledTriple<Scalar> &t) -> BasicPlanePoint<Scalar> {
  return BasicPlanePoint<Scalar>::make(t.a(), t.b());
}

/// Every distinct edge labelling of a shape: 6 for scalene, 3 for isosceles,
/// 1 for equilateral. Ties are detected by exact comparison.
template <typename Scalar>
auto s3_orbit(const BasicShapeTriple<Scalar> &s) -> std::vector<BasicLabeledTriple<Scalar>> {
  std::array<Scalar, 3> perm{s.a(), s.b(), s.c()};
  std::vector<BasicLabeledTriple<Scalar>> orbit;
  orbit.reserve(6);
  do {
    orbit.push_back(BasicLabeledTriple<Scalar>::make(perm[0], perm[1], perm[2]));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return orbit;
}

/// Sorting a labeled triple recovers its moduli-space representative.
template <typename Scalar> auto sorted_shape(const BasicLabeledTriple<Scalar> &t) -> BasicShapeTriple<Scalar> {
  std::array<Scalar, 3> v{t.a(), t.b(), t.c()};
  std::sort(v.begin(), v.end());
  return BasicShapeTriple<Scalar>::from_sorted(v[0], v[1], v[2]);
}

// Measures are ab-plane areas; the 1/sqrt(3) projection factor cancels in
// every ratio and is never applied.

/// Area of the ab-plane triangle (1,0), (0,1), (1,1).
constexpr auto measure_teich() -> double { return 0.5; }

/// One sixth of measure_teich(), the S3 quotient.
constexpr auto measure_moduli() -> double { return 1.0 / 12.0; }

/// Area of the region where the angle opposite c is obtuse.
inline auto single_obtuse_region_measure() -> double { return 1.5 - 2.0 * std::numbers::ln2; }

/// Area of the labeled obtuse locus, 9/2 - 6 ln 2.
inline auto obtuse_region_measure() -> double { return 4.5 - 6.0 * std::numbers::ln2; }

/// The right-angle curve a = 2(1 - b) / (2 - b) separating obtuse from acute
/// shapes; b must lie in (0, 1).
template <typename Scalar = double> auto right_locus(Scalar b) -> Scalar {
  if (!(b > 0 && b < 1)) throw GuardError("right_locus: b must lie in (0,1)");
  return 2 * (1 - b) / (2 - b);
}

enum class ModuliRegion { ObtuseAll, Acute, Full };

auto to_string(ModuliRegion region) -> std::string_view;

/// Exact membership; right triangles belong to neither ObtuseAll nor Acute.
auto region_contains(ModuliRegion region, const SimilarityKey &k) -> bool;

/// Real-valued membership via the sign of c^2 - a^2 - b^2 with strict
/// inequality; callers holding lattice data should use the key overload.
template <typename Scalar> auto region_contains(ModuliRegion region, const BasicShapeTriple<Scalar> &s) -> bool {
  const Scalar excess = s.c() * s.c() - s.a() * s.a() - s.b() * s.b();
  switch (region) {
  case ModuliRegion::ObtuseAll: return excess > 0;
  case ModuliRegion::Acute: return excess < 0;
  case ModuliRegion::Full: return true;
  }
  return false;
}

/// mu(region) / mu(moduli space).
auto uniform_target(ModuliRegion region) -> double;

/// A finite set of similarity classes with positive integer multiplicities.
/// Entries are kept sorted by key; the set is immutable once built.
class WeightedShapeSet {
public:
  struct Entry {
    SimilarityKey key;
    std::uint64_t weight;

    friend auto operator==(const Entry &, const Entry &) -> bool = default;
  };

  WeightedShapeSet() = default;

  /// Sorts by key and sums duplicate keys. Throws GuardError on a zero weight.
  static auto from_entries(std::vector<Entry> entries) -> WeightedShapeSet;

  [[nodiscard]] auto entries() const -> std::span<const Entry> { return entries_; }
  [[nodiscard]] auto total_weight() const -> std::uint64_t { return total_; }
  [[nodiscard]] auto size() const -> std::size_t { return entries_.size(); }
  [[nodiscard]] auto empty() const -> bool { return entries_.empty(); }
  /// Weight of k, or 0 when absent.
  [[nodiscard]] auto weight_of(const SimilarityKey &k) const -> std::uint64_t;
  [[nodiscard]] auto contains(const SimilarityKey &k) const -> bool { return weight_of(k) != 0; }

  friend auto operator==(const WeightedShapeSet &, const WeightedShapeSet &) -> bool = default;

private:
  std::vector<Entry> entries_;
  std::uint64_t total_ = 0;
};

/// Weighted fraction of the set lying in the region. Throws GuardError on an
/// empty set.
auto dirac_ratio(const WeightedShapeSet &s, ModuliRegion region) -> double;

} // namespace trimoduli
