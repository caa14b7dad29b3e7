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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "geometry.hpp"

namespace trienc {

enum class PolygonFormat { json, csv };

/// Raw vertex ring as read from disk, before validation.
struct PolygonDocument {
  std::vector<Vec2> vertices;
  std::string source;
  bool normalized = false;
};

/// JSON: a top-level array of [x, y] number pairs.
/// CSV: one "x,y" pair per line; '#' comments and blank lines ignored.
PolygonDocument parse_polygon(std::string_view data, PolygonFormat format,
                              std::string source = {});

std::string serialize_polygon(const std::vector<Vec2>& vertices,
                              PolygonFormat format);

struct ValidationResult {
  ConvexPolygon polygon;
  std::size_t merged_vertices = 0;  // colinear middle vertices dropped
  bool reversed = false;            // input was clockwise
};

/// Reverses clockwise rings, merges colinear neighbours, rejects
/// non-convex input. Throws Error with codes NonConvex,
/// DegenerateAfterMerge, DuplicateVertex, TooFewVertices.
ValidationResult validate_normalize(const PolygonDocument& doc,
                                    const Tolerances& tol = {});

struct Scene {
  const ConvexPolygon* polygon = nullptr;
  std::optional<Triangle> triangle;
  std::vector<Circle> circles;
  std::vector<Wedge> wedges;
  std::vector<ParamLine> lines;
};

/// Deterministic SVG 1.1 document; viewBox covers the scene bounding box
/// plus a 10% margin.
std::string render_svg(const Scene& scene);

}  // namespace trienc
