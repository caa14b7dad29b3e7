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

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "circle_fit.hpp"
#include "geometry.hpp"

namespace trienc {

enum class SolveMode { linear, quadratic_safe };

/// One side of a candidate enclosing triangle: either flush with a polygon
/// edge or tangent at a vertex; carries the circle that witnessed the
/// closing condition. The line is directed with the polygon on its left.
struct ClosingSide {
  enum class Kind { flush_edge, vertex_tangent };
  Kind kind;
  std::size_t index;  // edge index or vertex index
  Circle witness;
  ParamLine line;
};

struct BootstrapResult {
  /// Non-degenerate wedge: arm0 is the base edge, arm1 the closing side.
  Wedge wedge;
  ClosingSide side;
};

struct SolveOptions {
  SolveMode mode = SolveMode::linear;
  Tolerances tol{};
  int max_flips = 64;
  /// When set, receives one entry per edge run: the accepted perimeter
  /// after each improving flip (normalized units under solve()).
  std::vector<std::vector<double>>* flip_traces = nullptr;
};

struct SolveReport {
  Triangle best;
  double perimeter = 0.0;  // same units as the input polygon
  std::size_t flush_edge = 0;
  std::vector<double> per_edge_perimeters;
  std::vector<int> flip_counts;
  std::uint64_t advance_steps = 0;
  SolveMode mode = SolveMode::linear;
  bool max_flips_exceeded = false;
};

/// Builds the degenerate wedge of edge_index (base edge plus the parallel
/// supporting line through the antipodal vertex) and closes it across the
/// two chains between the contact elements. Among accepted candidates the
/// one whose wedge closes into the smallest triangle wins; ties go to the
/// smaller fit parameter, then the smaller element.
BootstrapResult bootstrap(const ConvexPolygon& poly, std::size_t edge_index,
                          const Tolerances& tol = {});

/// Optimal closing side for a non-degenerate wedge whose arms are tangent
/// to the polygon: a flush edge whose excircle touches it within the
/// segment, or a vertex whose larger inscribed circle has a polygon-tangent
/// tangent line. hint is an element index (2*i for vertex i, 2*i+1 for
/// edge i) to start the scan at.
ClosingSide close_wedge(const ConvexPolygon& poly, const Wedge& w,
                        std::optional<std::size_t> hint = {},
                        const Tolerances& tol = {});

/// Best triangle with the supporting line of edge_index as a flush side:
/// bootstrap, then wedge flipping until the perimeter stops improving.
/// Returns the triangle and the number of improving flips.
std::pair<Triangle, int> solve_for_edge(
    const ConvexPolygon& poly, std::size_t edge_index,
    const SolveOptions& opts = {.mode = SolveMode::quadratic_safe});

/// Minimum-perimeter enclosing triangle: runs the per-edge sweep over every
/// edge. The polygon is normalized (vertex mean at origin, bounding-box
/// diagonal 1) internally; the report is in input units.
SolveReport solve(const ConvexPolygon& poly, const SolveOptions& opts = {});

}  // namespace trienc
