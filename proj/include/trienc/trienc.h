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

/* C interface of the trienc shared library: minimum-perimeter triangles
 * enclosing convex polygons.
 *
 * All functions returning trienc_status leave a human-readable message in
 * trienc_last_error() (thread-local) on failure, and a short machine code
 * such as "NonConvex" in trienc_last_error_code(). Objects returned through
 * out-parameters are owned by the caller and released with the matching
 * _free function; string buffers with trienc_buffer_free.
 */
#ifndef TRIENC_TRIENC_H_
#define TRIENC_TRIENC_H_

#include <stddef.h>
#include <stdint.h>

#if defined(TRIENC_BUILDING_SHARED)
#define TRIENC_API __attribute__((visibility("default")))
#else
#define TRIENC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct trienc_polygon trienc_polygon;
typedef struct trienc_report trienc_report;
typedef struct trienc_oracle_result trienc_oracle_result;

typedef enum trienc_status {
  TRIENC_OK = 0,
  TRIENC_ERR_NULL_ARG = 1,
  TRIENC_ERR_BAD_ARG = 2,
  TRIENC_ERR_PARSE = 3,
  TRIENC_ERR_INVALID_POLYGON = 4,
  TRIENC_ERR_SOLVE = 5,
  TRIENC_ERR_ORACLE = 6,
  TRIENC_ERR_GENERATE = 7,
  TRIENC_ERR_NOMEM = 8
} trienc_status;

typedef enum trienc_mode {
  TRIENC_MODE_LINEAR = 0,
  TRIENC_MODE_QUADRATIC_SAFE = 1
} trienc_mode;

typedef enum trienc_format {
  TRIENC_FORMAT_JSON = 0,
  TRIENC_FORMAT_CSV = 1
} trienc_format;

/* Values <= 0 fall back to the built-in defaults
 * (1e-12, 1e-12, 1e-9, 1e-12 in normalized units). */
typedef struct trienc_tolerances {
  double len;
  double cross;
  double residual;
  double improve;
} trienc_tolerances;

TRIENC_API const char* trienc_version(void);
TRIENC_API const char* trienc_last_error(void);
TRIENC_API const char* trienc_last_error_code(void);

/* ---- polygons ---- */

/* xy holds n_vertices (x, y) pairs. Input is validated and normalized:
 * clockwise rings are reversed, colinear neighbours merged. */
TRIENC_API trienc_status trienc_polygon_create(const double* xy,
                                               size_t n_vertices,
                                               trienc_polygon** out);
TRIENC_API trienc_status trienc_polygon_parse(const char* data, size_t size,
                                              trienc_format format,
                                              trienc_polygon** out);
TRIENC_API trienc_status trienc_polygon_generate(size_t n_vertices,
                                                 uint64_t seed,
                                                 trienc_polygon** out);
TRIENC_API void trienc_polygon_free(trienc_polygon* poly);

TRIENC_API size_t trienc_polygon_vertex_count(const trienc_polygon* poly);
/* xy_out must hold 2 * vertex_count doubles. */
TRIENC_API trienc_status trienc_polygon_vertices(const trienc_polygon* poly,
                                                 double* xy_out);
TRIENC_API size_t trienc_polygon_merged_vertices(const trienc_polygon* poly);
TRIENC_API int trienc_polygon_was_reversed(const trienc_polygon* poly);
TRIENC_API trienc_status trienc_polygon_serialize(const trienc_polygon* poly,
                                                  trienc_format format,
                                                  char** out,
                                                  size_t* out_size);

/* ---- solver ---- */

TRIENC_API trienc_status trienc_solve(const trienc_polygon* poly,
                                      trienc_mode mode,
                                      const trienc_tolerances* tol,
                                      trienc_report** out);
TRIENC_API void trienc_report_free(trienc_report* report);

/* xy_out holds the 3 triangle vertices as 6 doubles. */
TRIENC_API trienc_status trienc_report_triangle(const trienc_report* report,
                                                double xy_out[6]);
TRIENC_API double trienc_report_perimeter(const trienc_report* report);
TRIENC_API size_t trienc_report_flush_edge(const trienc_report* report);
TRIENC_API uint64_t trienc_report_advance_steps(const trienc_report* report);
TRIENC_API trienc_mode trienc_report_mode(const trienc_report* report);
TRIENC_API int trienc_report_max_flips_exceeded(const trienc_report* report);
/* out must hold vertex_count doubles / uint32s. */
TRIENC_API trienc_status trienc_report_per_edge_perimeters(
    const trienc_report* report, double* out);
TRIENC_API trienc_status trienc_report_flip_counts(const trienc_report* report,
                                                   uint32_t* out);
/* The versioned result document ("schema": 1). */
TRIENC_API trienc_status trienc_report_to_json(const trienc_report* report,
                                               char** out, size_t* out_size);

/* ---- oracle ---- */

/* coarse_steps 0 selects the default (720). full_grid sweeps the first
 * angle over the grid instead of edge normals. */
TRIENC_API trienc_status trienc_oracle_run(const trienc_polygon* poly,
                                           uint32_t coarse_steps,
                                           int full_grid,
                                           trienc_oracle_result** out);
TRIENC_API void trienc_oracle_free(trienc_oracle_result* result);
TRIENC_API double trienc_oracle_perimeter(const trienc_oracle_result* result);
TRIENC_API trienc_status trienc_oracle_triangle(
    const trienc_oracle_result* result, double xy_out[6]);
TRIENC_API trienc_status trienc_oracle_angles(
    const trienc_oracle_result* result, double angles_out[3]);
TRIENC_API uint32_t trienc_oracle_grid_resolution(
    const trienc_oracle_result* result);
TRIENC_API int trienc_oracle_refined(const trienc_oracle_result* result);
TRIENC_API trienc_status trienc_oracle_to_json(
    const trienc_oracle_result* result, char** out, size_t* out_size);

/* ---- rendering ---- */

/* SVG of the polygon, plus the report's triangle when report is non-null. */
TRIENC_API trienc_status trienc_render_svg(const trienc_polygon* poly,
                                           const trienc_report* report,
                                           char** out, size_t* out_size);

TRIENC_API void trienc_buffer_free(char* buffer);

#ifdef __cplusplus
}
#endif

#endif /* TRIENC_TRIENC_H_ */
