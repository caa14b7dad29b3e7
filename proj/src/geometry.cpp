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
#include "geometry.hpp"

#include <algorithm>
#include <limits>
#include <numbers>

namespace trienc {

namespace {

double positive_fmod(double x, double m) {
  double r = std::fmod(x, m);
  return r < 0.0 ? r + m : r;
}

}  // namespace

double signed_point_line_distance(Vec2 a, Vec2 b, Vec2 x,
                                  const Tolerances& tol) {
  const Vec2 d = b - a;
  const double n = d.norm();
  if (n <= tol.len) {
    throw Error(Errc::degenerate_line, "distance from a degenerate line");
  }
  return d.cross(a - x) / n;
}

Vec2 intersect_lines(const ParamLine& l1, const ParamLine& l2,
                     const Tolerances& tol) {
  const Vec2 d1 = l1.direction();
  const Vec2 d2 = l2.direction();
  const double denom = d1.cross(d2);
  if (std::abs(denom) <= tol.cross) {
    throw Error(Errc::parallel_lines, "lines are parallel");
  }
  const double t = (l2.origin() - l1.origin()).cross(d2) / denom;
  return l1.at(t);
}

Wedge Wedge::from_arms(Vec2 s0, Vec2 e0, Vec2 s1, Vec2 e1,
                       const Tolerances& tol) {
  Wedge w;
  w.s0 = s0;
  w.e0 = e0;
  w.s1 = s1;
  w.e1 = e1;
  if ((e0 - s0).norm() <= tol.len || (e1 - s1).norm() <= tol.len) {
    throw Error(Errc::degenerate_line, "wedge arm has no direction");
  }
  w.degenerate = std::abs((e0 - s0).cross(e1 - s1)) <= tol.cross;
  return w;
}

Vec2 Wedge::apex(const Tolerances& tol) const {
  if (degenerate) {
    throw Error(Errc::degenerate_wedge, "degenerate wedge has no apex");
  }
  return intersect_lines(arm0(tol), arm1(tol), tol);
}

bool Triangle::contains(Vec2 p, double tol) const {
  const double orient = (vb - va).cross(vc - va) >= 0.0 ? 1.0 : -1.0;
  const Vec2 corners[3] = {va, vb, vc};
  for (int i = 0; i < 3; ++i) {
    const Vec2 s = corners[i];
    const Vec2 d = corners[(i + 1) % 3] - s;
    const double dist = d.cross(p - s) / d.norm();
    if (orient * dist < -tol) return false;
  }
  return true;
}

ConvexPolygon::ConvexPolygon(std::vector<Vec2> verts)
    : verts_(std::move(verts)) {
  const std::size_t n = verts_.size();
  unwrapped_normals_.resize(n);
  // Outward normal of a CCW edge is its direction rotated -90 degrees.
  Vec2 d = edge_vec(0);
  double phi = std::atan2(-d.x, d.y);
  unwrapped_normals_[0] = phi;
  for (std::size_t i = 1; i < n; ++i) {
    const Vec2 dn = edge_vec(i);
    phi += std::atan2(d.cross(dn), d.dot(dn));
    unwrapped_normals_[i] = phi;
    d = dn;
  }
}

ConvexPolygon ConvexPolygon::from_vertices(std::vector<Vec2> vertices) {
  const std::size_t n = vertices.size();
  if (n < 3) {
    throw Error(Errc::too_few_vertices, "polygon needs at least 3 vertices");
  }
  for (const Vec2& v : vertices) {
    if (!v.finite()) {
      throw Error(Errc::invalid_polygon, "non-finite vertex coordinate");
    }
  }
  double area2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    area2 += vertices[i].cross(vertices[(i + 1) % n]);
  }
  if (!(area2 > 0.0)) {
    throw Error(Errc::invalid_polygon,
                "vertex ring must be counterclockwise with positive area");
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 e_prev = vertices[i] - vertices[(i + n - 1) % n];
    const Vec2 e_next = vertices[(i + 1) % n] - vertices[i];
    if (!(e_prev.cross(e_next) > 0.0)) {
      throw Error(Errc::non_convex,
                  "vertex ring is not strictly convex at vertex " +
                      std::to_string(i));
    }
  }
  return ConvexPolygon(std::move(vertices));
}

double ConvexPolygon::perimeter() const {
  double p = 0.0;
  for (std::size_t i = 0; i < verts_.size(); ++i) p += edge_vec(i).norm();
  return p;
}

Vec2 ConvexPolygon::vertex_mean() const {
  Vec2 m;
  for (const Vec2& v : verts_) m = m + v;
  return m / static_cast<double>(verts_.size());
}

std::pair<Vec2, Vec2> ConvexPolygon::bounding_box() const {
  Vec2 lo{std::numeric_limits<double>::infinity(),
          std::numeric_limits<double>::infinity()};
  Vec2 hi = -lo;
  for (const Vec2& v : verts_) {
    lo.x = std::min(lo.x, v.x);
    lo.y = std::min(lo.y, v.y);
    hi.x = std::max(hi.x, v.x);
    hi.y = std::max(hi.y, v.y);
  }
  return {lo, hi};
}

std::size_t ConvexPolygon::support(Vec2 dir) const {
  std::size_t best = 0;
  double best_dot = verts_[0].dot(dir);
  for (std::size_t i = 1; i < verts_.size(); ++i) {
    const double d = verts_[i].dot(dir);
    if (d > best_dot) {
      best_dot = d;
      best = i;
    }
  }
  return best;
}

std::size_t ConvexPolygon::support_fast(double normal_angle) const {
  const std::size_t n = verts_.size();
  const double two_pi = 2.0 * std::numbers::pi;
  const double base = unwrapped_normals_[0];
  const double theta = base + positive_fmod(normal_angle - base, two_pi);
  auto it = std::lower_bound(unwrapped_normals_.begin(),
                             unwrapped_normals_.end(), theta);
  if (it == unwrapped_normals_.end()) return 0;
  return static_cast<std::size_t>(it - unwrapped_normals_.begin()) % n;
}

Frame Frame::of(const ConvexPolygon& poly) {
  Frame f;
  f.offset = poly.vertex_mean();
  const auto [lo, hi] = poly.bounding_box();
  f.scale = (hi - lo).norm();
  if (!(f.scale > 0.0)) f.scale = 1.0;
  return f;
}

ConvexPolygon normalized_copy(const ConvexPolygon& poly, const Frame& frame) {
  std::vector<Vec2> verts;
  verts.reserve(poly.size());
  for (const Vec2& v : poly.vertices()) verts.push_back(frame.to_local(v));
  return ConvexPolygon::from_vertices(std::move(verts));
}

ParamLine supporting_line(const ConvexPolygon& poly, double normal_angle) {
  const Vec2 normal{std::cos(normal_angle), std::sin(normal_angle)};
  const Vec2 v = poly.vertex(poly.support(normal));
  return {v, v + normal.perp()};
}

bool is_tangent_to_polygon(const ParamLine& l, const ConvexPolygon& poly,
                           const Tolerances& tol) {
  double min_d = std::numeric_limits<double>::infinity();
  double max_d = -min_d;
  double min_abs = min_d;
  for (const Vec2& v : poly.vertices()) {
    const double d = l.signed_distance(v);
    min_d = std::min(min_d, d);
    max_d = std::max(max_d, d);
    min_abs = std::min(min_abs, std::abs(d));
  }
  const bool one_side =
      min_d >= -tol.residual || max_d <= tol.residual;
  return one_side && min_abs <= tol.residual;
}

bool is_tangent_at_vertex(const ConvexPolygon& poly, std::size_t i, Vec2 dir,
                          const Tolerances& tol) {
  const std::size_t n = poly.size();
  const Vec2 u = dir.normalized();
  const Vec2 v = poly.vertex(i);
  const Vec2 prev = poly.vertex((i + n - 1) % n);
  const Vec2 next = poly.vertex((i + 1) % n);
  // Normalized offsets make this an angular test, independent of the local
  // edge lengths.
  return u.cross((prev - v).normalized()) >= -tol.residual &&
         u.cross((next - v).normalized()) >= -tol.residual;
}

std::size_t antipodal_vertex(const ConvexPolygon& poly,
                             std::size_t edge_index) {
  const ParamLine line = poly.edge_line(edge_index);
  std::size_t best = 0;
  double best_dist = -1.0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const double d = std::abs(line.signed_distance(poly.vertex(i)));
    if (d > best_dist) {
      best_dist = d;
      best = i;
    }
  }
  return best;
}

}  // namespace trienc
