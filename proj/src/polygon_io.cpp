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
#include "polygon_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>

#include <json.hpp>

namespace trienc {

namespace {

PolygonDocument parse_json(std::string_view data, std::string source) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(data);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::parse_error,
                "invalid JSON at byte " + std::to_string(e.byte) + ": " +
                    e.what());
  }
  if (!j.is_array()) {
    throw Error(Errc::parse_error, "expected a top-level array of [x, y]");
  }
  PolygonDocument doc;
  doc.source = std::move(source);
  doc.vertices.reserve(j.size());
  std::size_t idx = 0;
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number() ||
        !item[1].is_number()) {
      throw Error(Errc::parse_error,
                  "element " + std::to_string(idx) +
                      " is not an [x, y] number pair");
    }
    doc.vertices.push_back(
        {item[0].get<double>(), item[1].get<double>()});
    ++idx;
  }
  if (doc.vertices.size() < 3) {
    throw Error(Errc::too_few_vertices,
                "polygon needs at least 3 vertices, got " +
                    std::to_string(doc.vertices.size()));
  }
  return doc;
}

std::string_view trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

double parse_number(std::string_view token, std::size_t line_no) {
  token = trim(token);
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw Error(Errc::parse_error,
                "line " + std::to_string(line_no) + ": bad number '" +
                    std::string(token) + "'");
  }
  return value;
}

PolygonDocument parse_csv(std::string_view data, std::string source) {
  PolygonDocument doc;
  doc.source = std::move(source);
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= data.size()) {
    const std::size_t eol = data.find('\n', pos);
    std::string_view line =
        data.substr(pos, eol == std::string_view::npos ? data.size() - pos
                                                       : eol - pos);
    pos = eol == std::string_view::npos ? data.size() + 1 : eol + 1;
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const std::size_t comma = line.find(',');
    if (comma == std::string_view::npos ||
        line.find(',', comma + 1) != std::string_view::npos) {
      throw Error(Errc::parse_error, "line " + std::to_string(line_no) +
                                         ": expected exactly one 'x,y' pair");
    }
    doc.vertices.push_back({parse_number(line.substr(0, comma), line_no),
                            parse_number(line.substr(comma + 1), line_no)});
  }
  if (doc.vertices.size() < 3) {
    throw Error(Errc::too_few_vertices,
                "polygon needs at least 3 vertices, got " +
                    std::to_string(doc.vertices.size()));
  }
  return doc;
}

}  // namespace

PolygonDocument parse_polygon(std::string_view data, PolygonFormat format,
                              std::string source) {
  PolygonDocument doc = format == PolygonFormat::json
                            ? parse_json(data, std::move(source))
                            : parse_csv(data, std::move(source));
  for (const Vec2& v : doc.vertices) {
    if (!v.finite()) {
      throw Error(Errc::parse_error, "non-finite coordinate in input");
    }
  }
  return doc;
}

std::string serialize_polygon(const std::vector<Vec2>& vertices,
                              PolygonFormat format) {
  if (format == PolygonFormat::json) {
    nlohmann::json j = nlohmann::json::array();
    for (const Vec2& v : vertices) j.push_back({v.x, v.y});
    return j.dump() + "\n";
  }
  std::string out;
  char buf[64];
  for (const Vec2& v : vertices) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", v.x, v.y);
    out += buf;
  }
  return out;
}

ValidationResult validate_normalize(const PolygonDocument& doc,
                                    const Tolerances& tol) {
  std::vector<Vec2> verts = doc.vertices;
  const std::size_t n = verts.size();
  if (n < 3) {
    throw Error(Errc::too_few_vertices, "polygon needs at least 3 vertices");
  }
  for (const Vec2& v : verts) {
    if (!v.finite()) {
      throw Error(Errc::invalid_polygon, "non-finite vertex coordinate");
    }
  }

  // Tolerances are defined at unit scale; measure against the input's
  // bounding-box diagonal.
  Vec2 lo = verts[0], hi = verts[0];
  for (const Vec2& v : verts) {
    lo = {std::min(lo.x, v.x), std::min(lo.y, v.y)};
    hi = {std::max(hi.x, v.x), std::max(hi.y, v.y)};
  }
  const double scale = (hi - lo).norm();
  if (!(scale > 0.0)) {
    throw Error(Errc::degenerate_after_merge, "all vertices coincide");
  }

  for (std::size_t i = 0; i < n; ++i) {
    if ((verts[(i + 1) % n] - verts[i]).norm() <= tol.len * scale) {
      throw Error(Errc::duplicate_vertex,
                  "vertices " + std::to_string(i) + " and " +
                      std::to_string((i + 1) % n) + " coincide");
    }
  }

  bool reversed = false;
  std::size_t merged = 0;

  double area2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    area2 += verts[i].cross(verts[(i + 1) % n]);
  }
  if (area2 < 0.0) {
    std::reverse(verts.begin(), verts.end());
    reversed = true;
  }

  // Merge colinear neighbours; a near-zero turn with reversed direction is
  // a cusp, not a colinear run.
  const double cross_floor = tol.cross * scale * scale;
  bool merged_any = true;
  while (merged_any) {
    merged_any = false;
    for (std::size_t i = 0; i < verts.size() && verts.size() > 2;) {
      const std::size_t m = verts.size();
      const Vec2 prev = verts[(i + m - 1) % m];
      const Vec2 next = verts[(i + 1) % m];
      const Vec2 e_in = verts[i] - prev;
      const Vec2 e_out = next - verts[i];
      if (std::abs(e_in.cross(e_out)) <= cross_floor) {
        if (e_in.dot(e_out) <= 0.0) {
          throw Error(Errc::non_convex,
                      "cusp at vertex " + std::to_string(i));
        }
        verts.erase(verts.begin() + static_cast<std::ptrdiff_t>(i));
        ++merged;
        merged_any = true;
      } else {
        ++i;
      }
    }
  }
  if (verts.size() < 3) {
    throw Error(Errc::degenerate_after_merge,
                "fewer than 3 vertices after merging colinear runs");
  }

  for (std::size_t i = 0; i < verts.size(); ++i) {
    const std::size_t m = verts.size();
    const Vec2 e_in = verts[i] - verts[(i + m - 1) % m];
    const Vec2 e_out = verts[(i + 1) % m] - verts[i];
    if (e_in.cross(e_out) < 0.0) {
      throw Error(Errc::non_convex,
                  "reflex corner at vertex " + std::to_string(i));
    }
  }

  return ValidationResult{ConvexPolygon::from_vertices(std::move(verts)),
                          merged, reversed};
}

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

struct Box {
  Vec2 lo{std::numeric_limits<double>::infinity(),
          std::numeric_limits<double>::infinity()};
  Vec2 hi{-std::numeric_limits<double>::infinity(),
          -std::numeric_limits<double>::infinity()};
  void add(Vec2 p) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
  }
};

void append_line_segment(std::string& svg, Vec2 a, Vec2 b, double width,
                         const char* dash) {
  svg += "  <line x1=\"" + fmt(a.x) + "\" y1=\"" + fmt(a.y) + "\" x2=\"" +
         fmt(b.x) + "\" y2=\"" + fmt(b.y) +
         "\" stroke=\"#555555\" stroke-width=\"" + fmt(width) + "\"";
  if (dash) svg += std::string(" stroke-dasharray=\"") + dash + "\"";
  svg += " />\n";
}

}  // namespace

std::string render_svg(const Scene& scene) {
  if (scene.polygon == nullptr) {
    throw Error(Errc::bad_argument, "scene needs a polygon");
  }
  Box box;
  for (const Vec2& v : scene.polygon->vertices()) box.add(v);
  if (scene.triangle) {
    box.add(scene.triangle->va);
    box.add(scene.triangle->vb);
    box.add(scene.triangle->vc);
  }
  for (const Circle& c : scene.circles) {
    box.add(c.center + Vec2{c.radius, c.radius});
    box.add(c.center - Vec2{c.radius, c.radius});
  }
  for (const Wedge& w : scene.wedges) {
    box.add(w.s0);
    box.add(w.e0);
    box.add(w.s1);
    box.add(w.e1);
  }
  for (const ParamLine& l : scene.lines) {
    box.add(l.at(-0.5));
    box.add(l.at(1.5));
  }

  Vec2 extent = box.hi - box.lo;
  const double pad_x = extent.x > 0.0 ? 0.1 * extent.x : 0.5;
  const double pad_y = extent.y > 0.0 ? 0.1 * extent.y : 0.5;
  const Vec2 lo{box.lo.x - pad_x, box.lo.y - pad_y};
  const Vec2 hi{box.hi.x + pad_x, box.hi.y + pad_y};
  const double stroke = 0.006 * std::max(hi.x - lo.x, hi.y - lo.y);

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
         "viewBox=\"" +
         fmt(lo.x) + " " + fmt(-hi.y) + " " + fmt(hi.x - lo.x) + " " +
         fmt(hi.y - lo.y) + "\">\n";
  // Flip the y axis so geometry renders in the usual orientation.
  svg += "<g transform=\"scale(1,-1)\">\n";

  std::string d = "M";
  for (const Vec2& v : scene.polygon->vertices()) {
    d += " " + fmt(v.x) + " " + fmt(v.y);
  }
  d += " Z";
  svg += "  <path d=\"" + d + "\" fill=\"#d7e5f2\" stroke=\"#36648b\" "
         "stroke-width=\"" + fmt(stroke) + "\" />\n";

  for (const Wedge& w : scene.wedges) {
    append_line_segment(svg, w.s0, w.e0, stroke, nullptr);
    append_line_segment(svg, w.s1, w.e1, stroke, nullptr);
  }
  for (const ParamLine& l : scene.lines) {
    append_line_segment(svg, l.at(-0.5), l.at(1.5), stroke, "0.02 0.01");
  }
  for (const Circle& c : scene.circles) {
    svg += "  <circle cx=\"" + fmt(c.center.x) + "\" cy=\"" +
           fmt(c.center.y) + "\" r=\"" + fmt(c.radius) +
           "\" fill=\"none\" stroke=\"#777777\" stroke-width=\"" +
           fmt(stroke) + "\" />\n";
  }
  if (scene.triangle) {
    const Triangle& t = *scene.triangle;
    svg += "  <path d=\"M " + fmt(t.va.x) + " " + fmt(t.va.y) + " L " +
           fmt(t.vb.x) + " " + fmt(t.vb.y) + " L " + fmt(t.vc.x) + " " +
           fmt(t.vc.y) + " Z\" fill=\"none\" stroke=\"#b03a2e\" "
           "stroke-width=\"" + fmt(1.5 * stroke) + "\" />\n";
  }
  svg += "</g>\n</svg>\n";
  return svg;
}

}  // namespace trienc
