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
#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace trienc {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2() = default;
  constexpr Vec2(double px, double py) : x(px), y(py) {}

  constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator-() const { return {-x, -y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }
  constexpr bool operator==(const Vec2&) const = default;

  constexpr double dot(Vec2 o) const { return x * o.x + y * o.y; }
  constexpr double cross(Vec2 o) const { return x * o.y - y * o.x; }
  constexpr double norm2() const { return x * x + y * y; }
  double norm() const { return std::hypot(x, y); }
  /// Rotated by +90 degrees (counterclockwise).
  constexpr Vec2 perp() const { return {-y, x}; }
  Vec2 normalized() const {
    const double n = norm();
    return {x / n, y / n};
  }
  bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

constexpr Vec2 operator*(double s, Vec2 v) { return v * s; }

/// Signed area spanned by u and v. Antisymmetric, zero iff parallel.
constexpr double cross2(Vec2 u, Vec2 v) { return u.cross(v); }

/// Absolute tolerances, meaningful at unit scale (the solver normalizes
/// inputs so the bounding-box diagonal is 1 before applying them).
struct Tolerances {
  double len = 1e-12;
  double cross = 1e-12;
  double residual = 1e-9;
  double improve = 1e-12;
};

/// Directed line through two distinct points, evaluated as
/// (through - origin) * t + origin.
class ParamLine {
 public:
  ParamLine(Vec2 origin, Vec2 through, const Tolerances& tol = {})
      : origin_(origin), through_(through) {
    if ((through_ - origin_).norm() <= tol.len) {
      throw Error(Errc::degenerate_line,
                  "line requires two distinct points");
    }
  }

  Vec2 origin() const { return origin_; }
  Vec2 through() const { return through_; }
  Vec2 direction() const { return through_ - origin_; }

  Vec2 at(double t) const { return origin_ + direction() * t; }

  /// cross(dir, origin - x) / |dir|. Points left of the direction get a
  /// negative sign; with counterclockwise polygons the interior side is
  /// the negative one.
  double signed_distance(Vec2 x) const {
    const Vec2 d = direction();
    return d.cross(origin_ - x) / d.norm();
  }

  double param_of_foot(Vec2 x) const {
    const Vec2 d = direction();
    return (x - origin_).dot(d) / d.norm2();
  }

  Vec2 foot(Vec2 x) const { return at(param_of_foot(x)); }

 private:
  Vec2 origin_;
  Vec2 through_;
};

double signed_point_line_distance(Vec2 a, Vec2 b, Vec2 x,
                                  const Tolerances& tol = {});

Vec2 intersect_lines(const ParamLine& l1, const ParamLine& l2,
                     const Tolerances& tol = {});

struct Circle {
  Vec2 center;
  double radius = 0.0;
};

/// Ordered pair of directed arms. Degenerate iff the raw direction
/// vectors are parallel within tol.cross.
struct Wedge {
  Vec2 s0, e0;
  Vec2 s1, e1;
  bool degenerate = false;

  static Wedge from_arms(Vec2 s0, Vec2 e0, Vec2 s1, Vec2 e1,
                         const Tolerances& tol = {});

  Vec2 arm0_dir() const { return e0 - s0; }
  Vec2 arm1_dir() const { return e1 - s1; }
  ParamLine arm0(const Tolerances& tol = {}) const { return {s0, e0, tol}; }
  ParamLine arm1(const Tolerances& tol = {}) const { return {s1, e1, tol}; }

  /// Intersection of the two arm lines; throws for degenerate wedges.
  Vec2 apex(const Tolerances& tol = {}) const;
};

struct Triangle {
  Vec2 va, vb, vc;

  double side_a() const { return (vb - vc).norm(); }  // |CB|
  double side_b() const { return (va - vc).norm(); }  // |AC|
  double side_c() const { return (va - vb).norm(); }  // |AB|
  double perimeter() const { return side_a() + side_b() + side_c(); }
  double semiperimeter() const { return perimeter() / 2.0; }

  /// True when p lies inside or on the boundary within tol (works for
  /// either vertex orientation).
  bool contains(Vec2 p, double tol) const;
};

/// Strictly convex, counterclockwise vertex ring. Construction validates
/// orientation and strict convexity (positive cross at every corner);
/// tolerance-based cleanup of raw input lives in polygon_io.
class ConvexPolygon {
 public:
  static ConvexPolygon from_vertices(std::vector<Vec2> vertices);

  std::size_t size() const { return verts_.size(); }
  Vec2 vertex(std::size_t i) const { return verts_[i]; }
  Vec2 vertex_cyclic(std::size_t i) const { return verts_[i % verts_.size()]; }
  const std::vector<Vec2>& vertices() const { return verts_; }

  /// Edge i runs from vertex i to vertex i+1 (cyclic).
  Vec2 edge_vec(std::size_t i) const {
    return vertex_cyclic(i + 1) - verts_[i];
  }
  ParamLine edge_line(std::size_t i, const Tolerances& tol = {}) const {
    return {verts_[i], vertex_cyclic(i + 1), tol};
  }

  double perimeter() const;
  Vec2 vertex_mean() const;
  std::pair<Vec2, Vec2> bounding_box() const;

  /// Index of a vertex maximizing dot(v, dir); smallest index on ties.
  std::size_t support(Vec2 dir) const;

  /// Same query by outward-normal angle in O(log n). Tie handling is the
  /// caller's concern only insofar as any supporting vertex is returned.
  std::size_t support_fast(double normal_angle) const;

 private:
  explicit ConvexPolygon(std::vector<Vec2> verts);

  std::vector<Vec2> verts_;
  std::vector<double> unwrapped_normals_;  // edge normal angles, increasing
};

/// Transform between original coordinates and the solver's normalized
/// frame (vertex mean at the origin, bounding-box diagonal scaled to 1).
struct Frame {
  Vec2 offset;        // original-space location of the normalized origin
  double scale = 1.0; // original units per normalized unit

  Vec2 to_local(Vec2 p) const { return (p - offset) / scale; }
  Vec2 to_world(Vec2 p) const { return p * scale + offset; }

  static Frame of(const ConvexPolygon& poly);
};

ConvexPolygon normalized_copy(const ConvexPolygon& poly, const Frame& frame);

/// Supporting line with outward normal (cos t, sin t); direction is the
/// normal rotated +90 degrees so the polygon lies on the left.
ParamLine supporting_line(const ConvexPolygon& poly, double normal_angle);

/// All vertices on one closed side of l and at least one within
/// tol.residual of it.
bool is_tangent_to_polygon(const ParamLine& l, const ConvexPolygon& poly,
                           const Tolerances& tol = {});

/// O(1) tangency test for a line through vertex i with direction dir:
/// both neighbouring vertices must lie on the left closed side.
bool is_tangent_at_vertex(const ConvexPolygon& poly, std::size_t i, Vec2 dir,
                          const Tolerances& tol = {});

/// Vertex at maximum distance from the supporting line of edge
/// edge_index; smallest index on ties.
std::size_t antipodal_vertex(const ConvexPolygon& poly,
                             std::size_t edge_index);

}  // namespace trienc
