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
#include <optional>
#include <vector>

#include "geometry.hpp"

namespace trienc {

/// Output of the circle fitters: every algebraic candidate plus, where the
/// sub-problem defines one, the geometrically selected circle.
struct FitResult {
  std::vector<Circle> candidates;
  /// Line parameters that produced the candidates, aligned with
  /// `candidates` (empty for the excircle fit, which enumerates sign
  /// combinations instead).
  std::vector<double> params;
  std::optional<Circle> selected;
  std::optional<std::size_t> selected_index;  // position within candidates
  double selection_residual = 0.0;
};

/// Circles tangent to both arms of a degenerate wedge (a strip) and to the
/// line through a and b. Centers lie on the strip midline; the candidate on
/// the right of the directed line a->b is selected, so callers orient a->b
/// with the bounded side on the left.
FitResult fit_degenerate_wedge_line(const Wedge& w, Vec2 a, Vec2 b,
                                    const Tolerances& tol = {});

/// Circles tangent to both arms of a degenerate wedge passing through p
/// (which must lie between the arms, inclusive). Always two roots; a double
/// root (p on an arm) is returned twice. No context-free selection exists
/// for this sub-problem, so `selected` stays empty.
FitResult fit_degenerate_wedge_point(const Wedge& w, Vec2 p,
                                     const Tolerances& tol = {});

/// Excircle of the triangle cut from a non-degenerate wedge by the line
/// through a and b, tangent to that line. Solves the 2x2 offset system for
/// all four sign combinations and selects the candidate that is also
/// tangent to the second arm.
FitResult fit_wedge_line_excircle(const Wedge& w, Vec2 a, Vec2 b,
                                  const Tolerances& tol = {});

/// Circles inscribed in a non-degenerate wedge passing through p (strictly
/// inside). Centers lie on the wedge bisector; two roots, the larger circle
/// is selected.
FitResult fit_wedge_point_incircle(const Wedge& w, Vec2 p,
                                   const Tolerances& tol = {});

// Allocation-free cores for the solver's scan loops. Same mathematics as
// the fitters above (which wrap them), but rejections come back as nullopt
// instead of exceptions and nothing touches the heap. Preconditions are the
// caller's job here.
namespace fit_core {

struct StripFrame {
  Vec2 mid;     // a point equidistant from both arms
  Vec2 dir;     // arm1 direction; the midline runs mid + dir * t
  double half;  // half the inter-arm distance
};

/// Frame of a degenerate wedge; nullopt when the arms are not parallel or
/// coincide.
std::optional<StripFrame> strip_frame(const Wedge& w,
                                      const Tolerances& tol = {});

struct StripTangent {
  Circle circle;
  double param;  // midline parameter of the center
};

/// The strip circle tangent to line a->b on its right side (the caller
/// keeps the polygon on the left). nullopt when the line runs along the
/// arms.
std::optional<StripTangent> strip_line_tangent(const StripFrame& frame,
                                               Vec2 a, Vec2 b,
                                               const Tolerances& tol = {});

/// Both strip circles through p (assumed between the arms), ascending
/// midline parameter.
std::array<StripTangent, 2> strip_point_circles(const StripFrame& frame,
                                                Vec2 p);

/// Excircle of the triangle cut from the wedge (apex, arm directions d0,
/// d1) by line a->b: tangent to all three lines, across the cut line from
/// the apex. nullopt when the line does not cut a proper triangle or no
/// sign candidate passes the tangency gate.
std::optional<Circle> cut_excircle(Vec2 apex, Vec2 d0, Vec2 d1, Vec2 a,
                                   Vec2 b, const Tolerances& tol = {});

/// Wedge-inscribed circles through p, ascending radius. p must be strictly
/// inside the wedge spanned by d0 and d1 from the apex.
std::optional<std::array<Circle, 2>> inscribed_pair(Vec2 apex, Vec2 d0,
                                                    Vec2 d1, Vec2 p,
                                                    const Tolerances& tol =
                                                        {});

}  // namespace fit_core

}  // namespace trienc
