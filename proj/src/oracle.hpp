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

#include <array>
#include <cstdint>

#include "geometry.hpp"

namespace trienc {

/// Brute-force reference result: the best enclosing triangle found by
/// sweeping supporting-line normal angles.
struct OracleResult {
  Triangle triangle;
  double perimeter = 0.0;
  std::array<double, 3> angles{};  // outward normal angles, radians
  unsigned grid_resolution = 0;
  bool refined = false;
};

/// Triangle of the three supporting lines with outward normals t1, t2, t3.
/// The pairwise angular gaps must lie in (0, pi) so the normals positively
/// span the plane; otherwise DegenerateConfiguration.
Triangle triangle_from_angles(const ConvexPolygon& poly, double t1, double t2,
                              double t3, const Tolerances& tol = {});

struct OracleOptions {
  unsigned coarse_steps = 720;
  /// When set, sweep all three angles over the grid instead of pinning the
  /// first angle to edge normals. Slow; for skeptical cross-checks.
  bool full_grid = false;
  unsigned threads = 0;  // 0 = hardware concurrency
};

/// Grid search over supporting-line angles (first angle restricted to edge
/// normals unless full_grid), then derivative-free local refinement of the
/// best cell down to 1e-10 rad steps.
OracleResult oracle_min_perimeter(const ConvexPolygon& poly,
                                  const OracleOptions& opts = {});

/// Deterministic strictly convex polygon with exactly n vertices: convex
/// hull of random unit-disk points, resampled (with a growing sample count)
/// until the hull supports n vertices, thinned to n, colinearity re-checked.
/// Throws GenerationFailed when n is out of reach for the sample budget.
ConvexPolygon random_convex_polygon(std::size_t n, std::uint64_t seed);

}  // namespace trienc
