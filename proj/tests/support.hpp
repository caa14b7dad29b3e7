// Shared helpers for the test suites.
#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "geometry.hpp"

namespace trienc::test {

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}

  double unit() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(eng() % n); }
  Vec2 point(double lo, double hi) { return {uniform(lo, hi), uniform(lo, hi)}; }
};

inline Vec2 rotated(Vec2 v, double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

inline ConvexPolygon unit_square() {
  return ConvexPolygon::from_vertices({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

inline ConvexPolygon regular_ngon(std::size_t n, double circumradius = 1.0,
                                  double phase = 0.0) {
  std::vector<Vec2> v;
  v.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double a = phase + 2.0 * std::numbers::pi * k / n;
    v.push_back({circumradius * std::cos(a), circumradius * std::sin(a)});
  }
  return ConvexPolygon::from_vertices(std::move(v));
}

/// Strictly convex n-gon on the unit circle with jittered angles. Cheap for
/// very large n, unlike the disk-hull generator.
inline ConvexPolygon jittered_circle_polygon(std::size_t n,
                                             std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Vec2> v;
  v.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double a = 2.0 * std::numbers::pi *
                     (static_cast<double>(k) + 0.45 * (2.0 * rng.unit() - 1.0)) /
                     static_cast<double>(n);
    v.push_back({std::cos(a), std::sin(a)});
  }
  return ConvexPolygon::from_vertices(std::move(v));
}

/// Excircle opposite vertex c via the excenter formula: an oracle
/// independent of the offset-line system used by the fitter.
inline Circle excircle_opposite(Vec2 a, Vec2 b, Vec2 c) {
  const double la = (b - c).norm();   // opposite a
  const double lb = (a - c).norm();   // opposite b
  const double lc = (a - b).norm();   // opposite c
  const Vec2 center = (a * la + b * lb - c * lc) / (la + lb - lc);
  const double s = (la + lb + lc) / 2.0;
  const double area = std::abs((b - a).cross(c - a)) / 2.0;
  return Circle{center, area / (s - lc)};
}

}  // namespace trienc::test
