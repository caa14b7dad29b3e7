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

#include <stdexcept>
#include <string>

namespace trienc {

/// Machine-readable failure reasons. Every throwing path in the library
/// tags its exception with one of these so callers (and the C shim) can
/// map failures without string matching.
enum class Errc {
  degenerate_line,
  parallel_lines,
  not_degenerate,
  degenerate_wedge,
  line_parallel_to_arms,
  line_parallel_to_arm,
  point_outside_wedge,
  no_triangle,
  selection_failed,
  no_real_roots,
  invalid_polygon,
  non_convex,
  too_few_vertices,
  duplicate_vertex,
  degenerate_after_merge,
  parse_error,
  no_closing_side,
  degenerate_configuration,
  generation_failed,
  bad_argument,
  io_error,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::degenerate_line: return "DegenerateLine";
    case Errc::parallel_lines: return "ParallelLines";
    case Errc::not_degenerate: return "NotDegenerate";
    case Errc::degenerate_wedge: return "DegenerateWedge";
    case Errc::line_parallel_to_arms: return "LineParallelToArms";
    case Errc::line_parallel_to_arm: return "LineParallelToArm";
    case Errc::point_outside_wedge: return "PointOutsideWedge";
    case Errc::no_triangle: return "NoTriangle";
    case Errc::selection_failed: return "SelectionFailed";
    case Errc::no_real_roots: return "NoRealRoots";
    case Errc::invalid_polygon: return "InvalidPolygon";
    case Errc::non_convex: return "NonConvex";
    case Errc::too_few_vertices: return "TooFewVertices";
    case Errc::duplicate_vertex: return "DuplicateVertex";
    case Errc::degenerate_after_merge: return "DegenerateAfterMerge";
    case Errc::parse_error: return "ParseError";
    case Errc::no_closing_side: return "NoClosingSide";
    case Errc::degenerate_configuration: return "DegenerateConfiguration";
    case Errc::generation_failed: return "GenerationFailed";
    case Errc::bad_argument: return "BadArgument";
    case Errc::io_error: return "IoError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const { return code_; }
  const char* code_name() const { return errc_name(code_); }

 private:
  Errc code_;
};

}  // namespace trienc
