#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the library's lattice, moduli or enumeration code.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using Key = std::array<std::int64_t, 3>;
using Census = std::map<Key, std::uint64_t>;

struct Pt {
  std::int64_t x, y;
};

inline auto sq(std::int64_t v) -> std::int64_t { return v * v; }

/// Reduced sorted squared sides, computed from scratch.
inline auto key_of(Pt a, Pt b, Pt c) -> Key {
  Key k{sq(a.x - b.x) + sq(a.y - b.y), sq(b.x - c.x) + sq(b.y - c.y), sq(c.x - a.x) + sq(c.y - a.y)};
  std::sort(k.begin(), k.end());
  const std::int64_t g = std::gcd(std::gcd(k[0], k[1]), k[2]);
  for (auto &v : k) v /= g;
  return k;
}

inline auto area2(Pt a, Pt b, Pt c) -> std::int64_t { return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x); }

/// Every unordered triple of distinct non-collinear points in [lo, hi]^2.
inline auto brute_census(std::int64_t lo, std::int64_t hi) -> Census {
  std::vector<Pt> pts;
  for (std::int64_t x = lo; x <= hi; ++x)
    for (std::int64_t y = lo; y <= hi; ++y) pts.push_back({x, y});
  Census census;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      for (std::size_t k = j + 1; k < pts.size(); ++k)
        if (area2(pts[i], pts[j], pts[k]) != 0) ++census[key_of(pts[i], pts[j], pts[k])];
  return census;
}

/// Number of collinear unordered triples of distinct points in [-n, n]^2.
inline auto collinear_triples(std::int64_t n) -> std::uint64_t {
  std::vector<Pt> pts;
  for (std::int64_t x = -n; x <= n; ++x)
    for (std::int64_t y = -n; y <= n; ++y) pts.push_back({x, y});
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      for (std::size_t k = j + 1; k < pts.size(); ++k)
        if (area2(pts[i], pts[j], pts[k]) == 0) ++count;
  return count;
}

inline auto choose3(std::uint64_t m) -> std::uint64_t { return m * (m - 1) * (m - 2) / 6; }

/// Dot-product test for a right angle at any vertex.
inline auto has_right_angle(Pt a, Pt b, Pt c) -> bool {
  const auto dot = [](Pt o, Pt p, Pt q) { return (p.x - o.x) * (q.x - o.x) + (p.y - o.y) * (q.y - o.y); };
  return dot(a, b, c) == 0 || dot(b, c, a) == 0 || dot(c, a, b) == 0;
}

/// Shoelace area of a simple polygon.
inline auto shoelace(const std::vector<std::array<double, 2>> &poly) -> double {
  double twice = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const auto &p = poly[i];
    const auto &q = poly[(i + 1) % poly.size()];
    twice += p[0] * q[1] - q[0] * p[1];
  }
  return std::abs(twice) / 2;
}

/// Composite Simpson rule with `panels` (even) subintervals.
inline auto simpson(const std::function<double(double)> &f, double lo, double hi, int panels) -> double {
  const double h = (hi - lo) / panels;
  double sum = f(lo) + f(hi);
  for (int i = 1; i < panels; ++i) sum += f(lo + i * h) * (i % 2 ? 4 : 2);
  return sum * h / 3;
}

/// Convergents p/q of the continued fraction of x, as (q, p) pairs.
inline auto convergents(double x, int count) -> std::vector<std::array<std::int64_t, 2>> {
  std::vector<std::array<std::int64_t, 2>> out;
  std::int64_t p_prev = 1, q_prev = 0, p = static_cast<std::int64_t>(std::floor(x)), q = 1;
  out.push_back({q, p});
  double frac = x - std::floor(x);
  for (int i = 1; i < count && frac > 1e-12; ++i) {
    const double inv = 1.0 / frac;
    const auto a = static_cast<std::int64_t>(std::floor(inv));
    frac = inv - a;
    const std::int64_t p_next = a * p + p_prev, q_next = a * q + q_prev;
    p_prev = p;
    q_prev = q;
    p = p_next;
    q = q_next;
    out.push_back({q, p});
  }
  return out;
}

} // namespace oracle
