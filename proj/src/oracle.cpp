/*
 Copyright 2026 the trienc authors
 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      http://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/
#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <thread>
#include <vector>

namespace trienc {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kPi = std::numbers::pi;
constexpr double kRefineFloor = 1e-10;  // rad

double positive_fmod(double x, double m) {
  double r = std::fmod(x, m);
  return r < 0.0 ? r + m : r;
}

/// Perimeter of the supporting-line triangle for a fixed polygon. Keeps
/// the hot path free of allocations and exceptions; invalid angle triples
/// evaluate to +inf.
class PerimeterEval {
 public:
  explicit PerimeterEval(const ConvexPolygon& poly) : poly_(poly) {}

  double operator()(double t1, double t2, double t3) const {
    const double g12 = positive_fmod(t2 - t1, kTwoPi);
    const double g23 = positive_fmod(t3 - t2, kTwoPi);
    if (g12 <= 0.0 || g12 >= kPi || g23 <= 0.0 || g23 >= kPi ||
        g12 + g23 <= kPi) {  // third gap = 2*pi - g12 - g23 must be < pi
      return std::numeric_limits<double>::infinity();
    }
    const Vec2 p1 = support_point(t1);
    const Vec2 p2 = support_point(t2);
    const Vec2 p3 = support_point(t3);
    const Vec2 d1 = dir_of(t1);
    const Vec2 d2 = dir_of(t2);
    const Vec2 d3 = dir_of(t3);
    Vec2 v12, v23, v31;
    if (!meet(p1, d1, p2, d2, &v12) || !meet(p2, d2, p3, d3, &v23) ||
        !meet(p3, d3, p1, d1, &v31)) {
      return std::numeric_limits<double>::infinity();
    }
    return (v12 - v23).norm() + (v23 - v31).norm() + (v31 - v12).norm();
  }

  Vec2 support_point(double normal_angle) const {
    return poly_.vertex(poly_.support_fast(normal_angle));
  }

  static Vec2 dir_of(double normal_angle) {
    return {-std::sin(normal_angle), std::cos(normal_angle)};
  }

 private:
  static bool meet(Vec2 p, Vec2 d, Vec2 q, Vec2 e, Vec2* out) {
    const double denom = d.cross(e);
    if (std::abs(denom) < 1e-14) return false;
    *out = p + d * ((q - p).cross(e) / denom);
    return true;
  }

  const ConvexPolygon& poly_;
};

struct Candidate {
  double perimeter = std::numeric_limits<double>::infinity();
  double t1 = 0.0, t2 = 0.0, t3 = 0.0;
};

/// Pattern search around the best grid cell. Moves all three angles when
/// move_t1 is set (full-grid mode), otherwise only t2 and t3.
void refine(const PerimeterEval& eval, Candidate* c, double step0,
            bool move_t1) {
  double step = step0;
  while (step >= kRefineFloor) {
    Candidate best = *c;
    const int lo1 = move_t1 ? -1 : 0;
    const int hi1 = move_t1 ? 1 : 0;
    for (int i1 = lo1; i1 <= hi1; ++i1) {
      for (int i2 = -1; i2 <= 1; ++i2) {
        for (int i3 = -1; i3 <= 1; ++i3) {
          if (i1 == 0 && i2 == 0 && i3 == 0) continue;
          const double t1 = c->t1 + i1 * step;
          const double t2 = c->t2 + i2 * step;
          const double t3 = c->t3 + i3 * step;
          const double p = eval(t1, t2, t3);
          if (p < best.perimeter) best = {p, t1, t2, t3};
        }
      }
    }
    if (best.perimeter < c->perimeter) {
      *c = best;
    } else {
      step *= 0.5;
    }
  }
}

/// Best (t2, t3) pair for a fixed t1 over the valid coarse grid, refined.
Candidate sweep_for_t1(const PerimeterEval& eval, double t1, unsigned steps,
                       bool move_t1) {
  const double h = kPi / steps;
  Candidate best;
  best.t1 = t1;
  for (unsigned k2 = 1; k2 < steps; ++k2) {
    const double t2 = t1 + h * k2;
    const double lo = std::max(t2, t1 + kPi);
    const double hi = t2 + kPi;
    const auto m = static_cast<unsigned>(std::ceil((hi - lo) / h));
    for (unsigned k3 = 1; k3 < m; ++k3) {
      const double t3 = lo + (hi - lo) * k3 / m;
      const double p = eval(t1, t2, t3);
      if (p < best.perimeter) best = {p, t1, t2, t3};
    }
  }
  if (std::isfinite(best.perimeter)) refine(eval, &best, h, move_t1);
  return best;
}

void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& fn) {
  unsigned t = threads != 0 ? threads : std::thread::hardware_concurrency();
  t = std::max(1u, std::min<unsigned>(t, static_cast<unsigned>(count)));
  if (t == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(t);
  for (unsigned w = 0; w < t; ++w) {
    pool.emplace_back([&, w]() {
      for (std::size_t i = w; i < count; i += t) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

double edge_normal_angle(const ConvexPolygon& poly, std::size_t edge) {
  const Vec2 d = poly.edge_vec(edge);
  return std::atan2(-d.x, d.y);
}

}  // namespace

Triangle triangle_from_angles(const ConvexPolygon& poly, double t1, double t2,
                              double t3, const Tolerances& tol) {
  std::array<double, 3> sorted{positive_fmod(t1, kTwoPi),
                               positive_fmod(t2, kTwoPi),
                               positive_fmod(t3, kTwoPi)};
  std::sort(sorted.begin(), sorted.end());
  const double g1 = sorted[1] - sorted[0];
  const double g2 = sorted[2] - sorted[1];
  const double g3 = kTwoPi - g1 - g2;
  for (const double g : {g1, g2, g3}) {
    if (g <= tol.cross || g >= kPi - tol.cross) {
      throw Error(Errc::degenerate_configuration,
                  "normal angles do not positively span the plane");
    }
  }
  const ParamLine l1 = supporting_line(poly, sorted[0]);
  const ParamLine l2 = supporting_line(poly, sorted[1]);
  const ParamLine l3 = supporting_line(poly, sorted[2]);
  return Triangle{intersect_lines(l1, l2, tol), intersect_lines(l2, l3, tol),
                  intersect_lines(l3, l1, tol)};
}

OracleResult oracle_min_perimeter(const ConvexPolygon& poly,
                                  const OracleOptions& opts) {
  const unsigned steps = std::max(8u, opts.coarse_steps);
  PerimeterEval eval(poly);

  std::size_t sweeps = opts.full_grid ? 2 * steps : poly.size();
  std::vector<Candidate> per_sweep(sweeps);
  parallel_for(sweeps, opts.threads, [&](std::size_t i) {
    const double t1 = opts.full_grid
                          ? kTwoPi * static_cast<double>(i) / (2 * steps)
                          : edge_normal_angle(poly, i);
    per_sweep[i] = sweep_for_t1(eval, t1, steps, opts.full_grid);
  });

  Candidate best;
  for (const Candidate& c : per_sweep) {
    if (c.perimeter < best.perimeter) best = c;
  }
  if (!std::isfinite(best.perimeter)) {
    throw Error(Errc::degenerate_configuration,
                "grid search found no valid enclosing triangle");
  }

  OracleResult out;
  out.triangle = triangle_from_angles(poly, best.t1, best.t2, best.t3);
  out.perimeter = out.triangle.perimeter();
  out.angles = {best.t1, best.t2, best.t3};
  out.grid_resolution = steps;
  out.refined = true;
  return out;
}

namespace {

double next_unit_double(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

std::vector<Vec2> convex_hull_ccw(std::vector<Vec2> pts) {
  std::sort(pts.begin(), pts.end(), [](Vec2 a, Vec2 b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const std::size_t n = pts.size();
  if (n < 3) return {};
  std::vector<Vec2> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {  // lower chain
    while (k >= 2 &&
           (hull[k - 1] - hull[k - 2]).cross(pts[i] - hull[k - 2]) <= 0.0) {
      --k;
    }
    hull[k++] = pts[i];
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = n - 1; i-- > 0;) {  // upper chain
    while (k >= lower &&
           (hull[k - 1] - hull[k - 2]).cross(pts[i] - hull[k - 2]) <= 0.0) {
      --k;
    }
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

}  // namespace

ConvexPolygon random_convex_polygon(std::size_t n, std::uint64_t seed) {
  if (n < 3) {
    throw Error(Errc::bad_argument, "polygon size must be at least 3");
  }
  // Expected hull size of m uniform disk points grows like 3.38 * m^(1/3),
  // so the sample budget caps the reachable n.
  constexpr std::size_t kMaxSamples = 8'000'000;
  const double want = static_cast<double>(n);
  auto samples = static_cast<std::size_t>(
      64.0 + 4.0 * want + 0.9 * std::pow(want / 3.38, 3.0));
  if (samples > kMaxSamples) {
    throw Error(Errc::generation_failed,
                "requested vertex count needs more samples than the "
                "generator budget allows");
  }

  std::mt19937_64 eng(seed);
  const Tolerances tol;
  for (int attempt = 0; attempt < 12; ++attempt) {
    std::vector<Vec2> pts;
    pts.reserve(samples);
    for (std::size_t i = 0; i < samples; ++i) {
      const double angle = kTwoPi * next_unit_double(eng);
      const double radius = std::sqrt(next_unit_double(eng));
      pts.push_back({radius * std::cos(angle), radius * std::sin(angle)});
    }
    std::vector<Vec2> hull = convex_hull_ccw(std::move(pts));
    if (hull.size() >= n) {
      std::vector<Vec2> ring;
      ring.reserve(n);
      for (std::size_t i = 0; i < n; ++i) {
        ring.push_back(hull[i * hull.size() / n]);
      }
      // Re-check strict convexity at merge tolerance; a failure here counts
      // as the ring collapsing below n, so resample.
      bool clean = true;
      const double floor = tol.cross * 8.0;  // bbox diagonal <= 2*sqrt(2)
      for (std::size_t i = 0; i < n && clean; ++i) {
        const Vec2 e_in = ring[i] - ring[(i + n - 1) % n];
        const Vec2 e_out = ring[(i + 1) % n] - ring[i];
        clean = e_in.cross(e_out) > floor;
      }
      if (clean) return ConvexPolygon::from_vertices(std::move(ring));
    }
    samples = std::min(kMaxSamples, samples + samples / 2 + 64);
  }
  throw Error(Errc::generation_failed,
              "could not realize the requested vertex count");
}

}  // namespace trienc
