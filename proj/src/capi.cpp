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
#include <trienc/trienc.h>

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include <json.hpp>

#include "enclosing.hpp"
#include "errors.hpp"
#include "geometry.hpp"
#include "oracle.hpp"
#include "polygon_io.hpp"

struct trienc_polygon {
  trienc::ConvexPolygon poly;
  size_t merged = 0;
  bool reversed = false;
};

struct trienc_report {
  trienc::SolveReport rep;
};

struct trienc_oracle_result {
  trienc::OracleResult res;
};

namespace {

thread_local std::string tl_message;
thread_local std::string tl_code;

void set_error(const char* code, const std::string& message) {
  tl_code = code;
  tl_message = message;
}

trienc_status status_of(trienc::Errc c, trienc_status context) {
  using trienc::Errc;
  switch (c) {
    case Errc::parse_error:
      return TRIENC_ERR_PARSE;
    case Errc::too_few_vertices:
    case Errc::non_convex:
    case Errc::duplicate_vertex:
    case Errc::degenerate_after_merge:
    case Errc::invalid_polygon:
      return TRIENC_ERR_INVALID_POLYGON;
    case Errc::generation_failed:
      return TRIENC_ERR_GENERATE;
    case Errc::bad_argument:
      return TRIENC_ERR_BAD_ARG;
    default:
      return context;
  }
}

template <typename Fn>
trienc_status guarded(trienc_status context, Fn&& fn) {
  try {
    fn();
    return TRIENC_OK;
  } catch (const trienc::Error& e) {
    set_error(e.code_name(), e.what());
    return status_of(e.code(), context);
  } catch (const std::bad_alloc&) {
    set_error("OutOfMemory", "allocation failed");
    return TRIENC_ERR_NOMEM;
  } catch (const std::exception& e) {
    set_error("Internal", e.what());
    return context;
  }
}

trienc_status null_arg(const char* name) {
  set_error("NullArgument", std::string("null argument: ") + name);
  return TRIENC_ERR_NULL_ARG;
}

trienc::Tolerances tolerances_of(const trienc_tolerances* tol) {
  trienc::Tolerances t;
  if (tol != nullptr) {
    if (tol->len > 0.0) t.len = tol->len;
    if (tol->cross > 0.0) t.cross = tol->cross;
    if (tol->residual > 0.0) t.residual = tol->residual;
    if (tol->improve > 0.0) t.improve = tol->improve;
  }
  return t;
}

trienc_status copy_out(const std::string& s, char** out, size_t* out_size) {
  char* buf = static_cast<char*>(std::malloc(s.size() + 1));
  if (buf == nullptr) {
    set_error("OutOfMemory", "allocation failed");
    return TRIENC_ERR_NOMEM;
  }
  std::memcpy(buf, s.data(), s.size());
  buf[s.size()] = '\0';
  *out = buf;
  if (out_size != nullptr) *out_size = s.size();
  return TRIENC_OK;
}

nlohmann::json triangle_json(const trienc::Triangle& t) {
  return nlohmann::json::array(
      {{t.va.x, t.va.y}, {t.vb.x, t.vb.y}, {t.vc.x, t.vc.y}});
}

}  // namespace

extern "C" {

const char* trienc_version(void) { return "0.1.0"; }

const char* trienc_last_error(void) { return tl_message.c_str(); }

const char* trienc_last_error_code(void) { return tl_code.c_str(); }

trienc_status trienc_polygon_create(const double* xy, size_t n_vertices,
                                    trienc_polygon** out) {
  if (xy == nullptr) return null_arg("xy");
  if (out == nullptr) return null_arg("out");
  return guarded(TRIENC_ERR_INVALID_POLYGON, [&] {
    trienc::PolygonDocument doc;
    doc.vertices.reserve(n_vertices);
    for (size_t i = 0; i < n_vertices; ++i) {
      doc.vertices.push_back({xy[2 * i], xy[2 * i + 1]});
    }
    auto vr = trienc::validate_normalize(doc);
    *out = new trienc_polygon{std::move(vr.polygon), vr.merged_vertices,
                              vr.reversed};
  });
}

trienc_status trienc_polygon_parse(const char* data, size_t size,
                                   trienc_format format,
                                   trienc_polygon** out) {
  if (data == nullptr) return null_arg("data");
  if (out == nullptr) return null_arg("out");
  return guarded(TRIENC_ERR_PARSE, [&] {
    const auto fmt = format == TRIENC_FORMAT_CSV ? trienc::PolygonFormat::csv
                                                 : trienc::PolygonFormat::json;
    auto doc = trienc::parse_polygon(std::string_view(data, size), fmt);
    auto vr = trienc::validate_normalize(doc);
    *out = new trienc_polygon{std::move(vr.polygon), vr.merged_vertices,
                              vr.reversed};
  });
}

trienc_status trienc_polygon_generate(size_t n_vertices, uint64_t seed,
                                      trienc_polygon** out) {
  if (out == nullptr) return null_arg("out");
  return guarded(TRIENC_ERR_GENERATE, [&] {
    *out = new trienc_polygon{trienc::random_convex_polygon(n_vertices, seed),
                              0, false};
  });
}

void trienc_polygon_free(trienc_polygon* poly) { delete poly; }

size_t trienc_polygon_vertex_count(const trienc_polygon* poly) {
  return poly == nullptr ? 0 : poly->poly.size();
}

trienc_status trienc_polygon_vertices(const trienc_polygon* poly,
                                      double* xy_out) {
  if (poly == nullptr) return null_arg("poly");
  if (xy_out == nullptr) return null_arg("xy_out");
  for (size_t i = 0; i < poly->poly.size(); ++i) {
    xy_out[2 * i] = poly->poly.vertex(i).x;
    xy_out[2 * i + 1] = poly->poly.vertex(i).y;
  }
  return TRIENC_OK;
}

size_t trienc_polygon_merged_vertices(const trienc_polygon* poly) {
  return poly == nullptr ? 0 : poly->merged;
}

int trienc_polygon_was_reversed(const trienc_polygon* poly) {
  return poly != nullptr && poly->reversed ? 1 : 0;
}

trienc_status trienc_polygon_serialize(const trienc_polygon* poly,
                                       trienc_format format, char** out,
                                       size_t* out_size) {
  if (poly == nullptr) return null_arg("poly");
  if (out == nullptr) return null_arg("out");
  std::string s;
  const trienc_status st = guarded(TRIENC_ERR_BAD_ARG, [&] {
    s = trienc::serialize_polygon(
        poly->poly.vertices(), format == TRIENC_FORMAT_CSV
                                   ? trienc::PolygonFormat::csv
                                   : trienc::PolygonFormat::json);
  });
  if (st != TRIENC_OK) return st;
  return copy_out(s, out, out_size);
}

trienc_status trienc_solve(const trienc_polygon* poly, trienc_mode mode,
                           const trienc_tolerances* tol, trienc_report** out) {
  if (poly == nullptr) return null_arg("poly");
  if (out == nullptr) return null_arg("out");
  return guarded(TRIENC_ERR_SOLVE, [&] {
    trienc::SolveOptions opts;
    opts.mode = mode == TRIENC_MODE_QUADRATIC_SAFE
                    ? trienc::SolveMode::quadratic_safe
                    : trienc::SolveMode::linear;
    opts.tol = tolerances_of(tol);
    *out = new trienc_report{trienc::solve(poly->poly, opts)};
  });
}

void trienc_report_free(trienc_report* report) { delete report; }

trienc_status trienc_report_triangle(const trienc_report* report,
                                     double xy_out[6]) {
  if (report == nullptr) return null_arg("report");
  if (xy_out == nullptr) return null_arg("xy_out");
  const trienc::Triangle& t = report->rep.best;
  xy_out[0] = t.va.x;
  xy_out[1] = t.va.y;
  xy_out[2] = t.vb.x;
  xy_out[3] = t.vb.y;
  xy_out[4] = t.vc.x;
  xy_out[5] = t.vc.y;
  return TRIENC_OK;
}

double trienc_report_perimeter(const trienc_report* report) {
  return report == nullptr ? 0.0 : report->rep.perimeter;
}

size_t trienc_report_flush_edge(const trienc_report* report) {
  return report == nullptr ? 0 : report->rep.flush_edge;
}

uint64_t trienc_report_advance_steps(const trienc_report* report) {
  return report == nullptr ? 0 : report->rep.advance_steps;
}

trienc_mode trienc_report_mode(const trienc_report* report) {
  return report != nullptr &&
                 report->rep.mode == trienc::SolveMode::quadratic_safe
             ? TRIENC_MODE_QUADRATIC_SAFE
             : TRIENC_MODE_LINEAR;
}

int trienc_report_max_flips_exceeded(const trienc_report* report) {
  return report != nullptr && report->rep.max_flips_exceeded ? 1 : 0;
}

trienc_status trienc_report_per_edge_perimeters(const trienc_report* report,
                                                double* out) {
  if (report == nullptr) return null_arg("report");
  if (out == nullptr) return null_arg("out");
  const auto& v = report->rep.per_edge_perimeters;
  std::memcpy(out, v.data(), v.size() * sizeof(double));
  return TRIENC_OK;
}

trienc_status trienc_report_flip_counts(const trienc_report* report,
                                        uint32_t* out) {
  if (report == nullptr) return null_arg("report");
  if (out == nullptr) return null_arg("out");
  const auto& v = report->rep.flip_counts;
  for (size_t i = 0; i < v.size(); ++i) {
    out[i] = static_cast<uint32_t>(v[i]);
  }
  return TRIENC_OK;
}

trienc_status trienc_report_to_json(const trienc_report* report, char** out,
                                    size_t* out_size) {
  if (report == nullptr) return null_arg("report");
  if (out == nullptr) return null_arg("out");
  const trienc::SolveReport& r = report->rep;
  nlohmann::json j{
      {"schema", 1},
      {"mode", r.mode == trienc::SolveMode::quadratic_safe ? "quadratic_safe"
                                                           : "linear"},
      {"perimeter", r.perimeter},
      {"flush_edge", r.flush_edge},
      {"triangle", triangle_json(r.best)},
      {"per_edge_perimeters", r.per_edge_perimeters},
      {"flip_counts", r.flip_counts},
      {"advance_steps", r.advance_steps},
      {"max_flips_exceeded", r.max_flips_exceeded},
  };
  return copy_out(j.dump(2) + "\n", out, out_size);
}

trienc_status trienc_oracle_run(const trienc_polygon* poly,
                                uint32_t coarse_steps, int full_grid,
                                trienc_oracle_result** out) {
  if (poly == nullptr) return null_arg("poly");
  if (out == nullptr) return null_arg("out");
  return guarded(TRIENC_ERR_ORACLE, [&] {
    trienc::OracleOptions opts;
    if (coarse_steps != 0) opts.coarse_steps = coarse_steps;
    opts.full_grid = full_grid != 0;
    *out = new trienc_oracle_result{
        trienc::oracle_min_perimeter(poly->poly, opts)};
  });
}

void trienc_oracle_free(trienc_oracle_result* result) { delete result; }

double trienc_oracle_perimeter(const trienc_oracle_result* result) {
  return result == nullptr ? 0.0 : result->res.perimeter;
}

trienc_status trienc_oracle_triangle(const trienc_oracle_result* result,
                                     double xy_out[6]) {
  if (result == nullptr) return null_arg("result");
  if (xy_out == nullptr) return null_arg("xy_out");
  const trienc::Triangle& t = result->res.triangle;
  xy_out[0] = t.va.x;
  xy_out[1] = t.va.y;
  xy_out[2] = t.vb.x;
  xy_out[3] = t.vb.y;
  xy_out[4] = t.vc.x;
  xy_out[5] = t.vc.y;
  return TRIENC_OK;
}

trienc_status trienc_oracle_angles(const trienc_oracle_result* result,
                                   double angles_out[3]) {
  if (result == nullptr) return null_arg("result");
  if (angles_out == nullptr) return null_arg("angles_out");
  angles_out[0] = result->res.angles[0];
  angles_out[1] = result->res.angles[1];
  angles_out[2] = result->res.angles[2];
  return TRIENC_OK;
}

uint32_t trienc_oracle_grid_resolution(const trienc_oracle_result* result) {
  return result == nullptr ? 0 : result->res.grid_resolution;
}

int trienc_oracle_refined(const trienc_oracle_result* result) {
  return result != nullptr && result->res.refined ? 1 : 0;
}

trienc_status trienc_oracle_to_json(const trienc_oracle_result* result,
                                    char** out, size_t* out_size) {
  if (result == nullptr) return null_arg("result");
  if (out == nullptr) return null_arg("out");
  const trienc::OracleResult& r = result->res;
  nlohmann::json j{
      {"schema", 1},
      {"perimeter", r.perimeter},
      {"angles", r.angles},
      {"grid_resolution", r.grid_resolution},
      {"refined", r.refined},
      {"triangle", triangle_json(r.triangle)},
  };
  return copy_out(j.dump(2) + "\n", out, out_size);
}

trienc_status trienc_render_svg(const trienc_polygon* poly,
                                const trienc_report* report, char** out,
                                size_t* out_size) {
  if (poly == nullptr) return null_arg("poly");
  if (out == nullptr) return null_arg("out");
  std::string svg;
  const trienc_status st = guarded(TRIENC_ERR_BAD_ARG, [&] {
    trienc::Scene scene;
    scene.polygon = &poly->poly;
    if (report != nullptr) scene.triangle = report->rep.best;
    svg = trienc::render_svg(scene);
  });
  if (st != TRIENC_OK) return st;
  return copy_out(svg, out, out_size);
}

void trienc_buffer_free(char* buffer) { std::free(buffer); }

}  // extern "C"
