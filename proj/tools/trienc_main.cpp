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

// Command-line front end. Talks to the solver exclusively through the
// shared library's C interface.

#include <trienc/trienc.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

namespace {

// Exit codes are a stable contract.
constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitInput = 2;
constexpr int kExitSolver = 3;
constexpr int kExitGate = 4;

int exit_code_of(trienc_status st) {
  switch (st) {
    case TRIENC_OK:
      return kExitOk;
    case TRIENC_ERR_PARSE:
    case TRIENC_ERR_INVALID_POLYGON:
    case TRIENC_ERR_GENERATE:
    case TRIENC_ERR_BAD_ARG:
    case TRIENC_ERR_NULL_ARG:
      return kExitInput;
    default:
      return kExitSolver;
  }
}

void print_error() {
  std::cerr << "error (" << trienc_last_error_code()
            << "): " << trienc_last_error() << "\n";
}

struct PolygonDeleter {
  void operator()(trienc_polygon* p) const { trienc_polygon_free(p); }
};
struct ReportDeleter {
  void operator()(trienc_report* r) const { trienc_report_free(r); }
};
struct OracleDeleter {
  void operator()(trienc_oracle_result* r) const { trienc_oracle_free(r); }
};
using PolygonPtr = std::unique_ptr<trienc_polygon, PolygonDeleter>;
using ReportPtr = std::unique_ptr<trienc_report, ReportDeleter>;
using OraclePtr = std::unique_ptr<trienc_oracle_result, OracleDeleter>;

std::string take_buffer(char* buf, size_t size) {
  std::string s(buf, size);
  trienc_buffer_free(buf);
  return s;
}

bool read_file(const std::string& path, std::string* out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  *out = ss.str();
  return in.good() || in.eof();
}

bool write_output(const std::string& path, const std::string& data) {
  if (path.empty() || path == "-") {
    std::cout << data;
    return static_cast<bool>(std::cout);
  }
  std::ofstream out(path, std::ios::binary);
  out << data;
  return static_cast<bool>(out);
}

trienc_format format_for(const std::string& flag, const std::string& path) {
  if (flag == "csv") return TRIENC_FORMAT_CSV;
  if (flag == "json") return TRIENC_FORMAT_JSON;
  // auto: decide by extension
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv") {
    return TRIENC_FORMAT_CSV;
  }
  return TRIENC_FORMAT_JSON;
}

struct TolFlags {
  std::optional<double> len, cross, residual, improve;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--tol-len", len, "Length tolerance (normalized units)");
    cmd->add_option("--tol-cross", cross, "Parallelism tolerance");
    cmd->add_option("--tol-residual", residual, "Residual tolerance");
    cmd->add_option("--tol-improve", improve,
                    "Perimeter improvement tolerance");
  }

  // TRIENC_TOL_RESIDUAL applies when no explicit flag was given.
  std::optional<trienc_tolerances> resolve(int* err) const {
    std::optional<double> residual_eff = residual;
    if (!residual_eff) {
      if (const char* env = std::getenv("TRIENC_TOL_RESIDUAL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end == env || *end != '\0' || !(v > 0.0)) {
          std::cerr << "error (BadArgument): TRIENC_TOL_RESIDUAL is not a "
                       "positive decimal string\n";
          *err = kExitInput;
          return std::nullopt;
        }
        residual_eff = v;
      }
    }
    if (!len && !cross && !residual_eff && !improve) return std::nullopt;
    trienc_tolerances t{len.value_or(0.0), cross.value_or(0.0),
                        residual_eff.value_or(0.0), improve.value_or(0.0)};
    return t;
  }
};

int load_polygon(const std::string& path, const std::string& format_flag,
                 PolygonPtr* out) {
  std::string data;
  if (!read_file(path, &data)) {
    std::cerr << "error (IoError): cannot read " << path << "\n";
    return kExitIo;
  }
  trienc_polygon* poly = nullptr;
  const trienc_status st = trienc_polygon_parse(
      data.data(), data.size(), format_for(format_flag, path), &poly);
  if (st != TRIENC_OK) {
    print_error();
    return exit_code_of(st);
  }
  out->reset(poly);
  return kExitOk;
}

int run_solve(const std::string& input, const std::string& output,
              const std::string& format_flag, const std::string& mode_flag,
              const TolFlags& tols) {
  PolygonPtr poly;
  if (int rc = load_polygon(input, format_flag, &poly)) return rc;

  int err = 0;
  const auto tol = tols.resolve(&err);
  if (err != 0) return err;

  const trienc_mode mode = mode_flag == "quadratic-safe"
                               ? TRIENC_MODE_QUADRATIC_SAFE
                               : TRIENC_MODE_LINEAR;
  trienc_report* rep = nullptr;
  const trienc_status st =
      trienc_solve(poly.get(), mode, tol ? &*tol : nullptr, &rep);
  if (st != TRIENC_OK) {
    print_error();
    return exit_code_of(st);
  }
  ReportPtr report(rep);

  char* buf = nullptr;
  size_t size = 0;
  if (trienc_report_to_json(report.get(), &buf, &size) != TRIENC_OK) {
    print_error();
    return kExitSolver;
  }
  if (!write_output(output, take_buffer(buf, size))) {
    std::cerr << "error (IoError): cannot write " << output << "\n";
    return kExitIo;
  }
  return kExitOk;
}

int run_oracle(const std::string& input, const std::string& output,
               const std::string& format_flag, unsigned coarse_steps,
               bool full_grid, bool compare, double gap_tol,
               const std::string& mode_flag, const TolFlags& tols) {
  PolygonPtr poly;
  if (int rc = load_polygon(input, format_flag, &poly)) return rc;

  trienc_oracle_result* ores = nullptr;
  trienc_status st = trienc_oracle_run(poly.get(), coarse_steps,
                                       full_grid ? 1 : 0, &ores);
  if (st != TRIENC_OK) {
    print_error();
    return exit_code_of(st);
  }
  OraclePtr oracle(ores);

  char* buf = nullptr;
  size_t size = 0;
  if (trienc_oracle_to_json(oracle.get(), &buf, &size) != TRIENC_OK) {
    print_error();
    return kExitSolver;
  }
  nlohmann::json doc = nlohmann::json::parse(take_buffer(buf, size));

  bool gate_failed = false;
  if (compare) {
    int err = 0;
    const auto tol = tols.resolve(&err);
    if (err != 0) return err;
    const trienc_mode mode = mode_flag == "quadratic-safe"
                                 ? TRIENC_MODE_QUADRATIC_SAFE
                                 : TRIENC_MODE_LINEAR;
    trienc_report* rep = nullptr;
    st = trienc_solve(poly.get(), mode, tol ? &*tol : nullptr, &rep);
    if (st != TRIENC_OK) {
      print_error();
      return exit_code_of(st);
    }
    ReportPtr report(rep);
    const double po = trienc_oracle_perimeter(oracle.get());
    const double ps = trienc_report_perimeter(report.get());
    const double gap = std::abs(ps - po) / std::max(po, ps);
    doc["solver_perimeter"] = ps;
    doc["relative_gap"] = gap;
    doc["gap_tolerance"] = gap_tol;
    doc["pass"] = gap <= gap_tol;
    gate_failed = gap > gap_tol;
  }

  if (!write_output(output, doc.dump(2) + "\n")) {
    std::cerr << "error (IoError): cannot write " << output << "\n";
    return kExitIo;
  }
  return gate_failed ? kExitGate : kExitOk;
}

int run_gen(size_t n, uint64_t seed, const std::string& output,
            const std::string& format_flag) {
  trienc_polygon* poly = nullptr;
  const trienc_status st = trienc_polygon_generate(n, seed, &poly);
  if (st != TRIENC_OK) {
    print_error();
    return exit_code_of(st);
  }
  PolygonPtr holder(poly);

  char* buf = nullptr;
  size_t size = 0;
  const trienc_format fmt =
      format_flag == "csv" ? TRIENC_FORMAT_CSV : TRIENC_FORMAT_JSON;
  if (trienc_polygon_serialize(holder.get(), fmt, &buf, &size) != TRIENC_OK) {
    print_error();
    return kExitInput;
  }
  if (!write_output(output, take_buffer(buf, size))) {
    std::cerr << "error (IoError): cannot write " << output << "\n";
    return kExitIo;
  }
  return kExitOk;
}

int run_check(const std::string& input, const std::string& format_flag) {
  std::string data;
  if (!read_file(input, &data)) {
    std::cerr << "error (IoError): cannot read " << input << "\n";
    return kExitIo;
  }
  trienc_polygon* poly = nullptr;
  const trienc_status st = trienc_polygon_parse(
      data.data(), data.size(), format_for(format_flag, input), &poly);
  if (st != TRIENC_OK) {
    std::cout << "valid: false\nreason: " << trienc_last_error_code() << "\n";
    std::cerr << "error (" << trienc_last_error_code()
              << "): " << trienc_last_error() << "\n";
    return exit_code_of(st);
  }
  PolygonPtr holder(poly);
  std::cout << "valid: true\n";
  std::cout << "vertices: " << trienc_polygon_vertex_count(holder.get())
            << "\n";
  std::cout << "merged: " << trienc_polygon_merged_vertices(holder.get())
            << "\n";
  std::cout << "reversed: "
            << (trienc_polygon_was_reversed(holder.get()) ? "true" : "false")
            << "\n";
  return kExitOk;
}

int run_render(const std::string& input, const std::string& output,
               const std::string& format_flag, bool with_solve,
               const std::string& mode_flag) {
  PolygonPtr poly;
  if (int rc = load_polygon(input, format_flag, &poly)) return rc;

  ReportPtr report;
  if (with_solve) {
    const trienc_mode mode = mode_flag == "quadratic-safe"
                                 ? TRIENC_MODE_QUADRATIC_SAFE
                                 : TRIENC_MODE_LINEAR;
    trienc_report* rep = nullptr;
    const trienc_status st = trienc_solve(poly.get(), mode, nullptr, &rep);
    if (st != TRIENC_OK) {
      print_error();
      return exit_code_of(st);
    }
    report.reset(rep);
  }

  char* buf = nullptr;
  size_t size = 0;
  const trienc_status st =
      trienc_render_svg(poly.get(), report.get(), &buf, &size);
  if (st != TRIENC_OK) {
    print_error();
    return exit_code_of(st);
  }
  if (!write_output(output, take_buffer(buf, size))) {
    std::cerr << "error (IoError): cannot write " << output << "\n";
    return kExitIo;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum-perimeter triangle enclosing a convex polygon"};
  app.require_subcommand(1);
  app.set_version_flag("--version", trienc_version());

  std::string input, output, format = "auto";
  std::string mode = "linear";
  TolFlags tols;

  auto* solve = app.add_subcommand("solve", "Solve one polygon");
  solve->add_option("input", input, "Polygon file")->required();
  solve->add_option("-o,--output", output, "Output path (default stdout)");
  solve->add_option("--format", format, "json|csv|auto")
      ->check(CLI::IsMember({"json", "csv", "auto"}));
  solve->add_option("--mode", mode, "linear|quadratic-safe")
      ->check(CLI::IsMember({"linear", "quadratic-safe"}));
  tols.add_to(solve);

  unsigned coarse_steps = 0;
  bool full_grid = false, compare = false;
  double gap_tol = 1e-4;
  auto* oracle = app.add_subcommand("oracle", "Brute-force reference");
  oracle->add_option("input", input, "Polygon file")->required();
  oracle->add_option("-o,--output", output, "Output path (default stdout)");
  oracle->add_option("--format", format, "json|csv|auto")
      ->check(CLI::IsMember({"json", "csv", "auto"}));
  oracle->add_option("--coarse-steps", coarse_steps,
                     "Grid resolution (default 720)");
  oracle->add_flag("--full-grid", full_grid,
                   "Sweep the first angle too (slow)");
  oracle->add_flag("--compare", compare, "Also run the solver and gate on "
                                         "the relative gap");
  oracle->add_option("--gap-tol", gap_tol,
                     "Gate threshold for --compare (default 1e-4)");
  oracle->add_option("--mode", mode, "Solver mode for --compare")
      ->check(CLI::IsMember({"linear", "quadratic-safe"}));
  tols.add_to(oracle);

  size_t gen_n = 0;
  uint64_t gen_seed = 0;
  auto* gen = app.add_subcommand("gen", "Generate a random convex polygon");
  gen->add_option("--n", gen_n, "Vertex count")->required();
  gen->add_option("--seed", gen_seed, "RNG seed")->required();
  gen->add_option("-o,--output", output, "Output path (default stdout)");
  gen->add_option("--format", format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* check = app.add_subcommand("check", "Validate a polygon file");
  check->add_option("input", input, "Polygon file")->required();
  check->add_option("--format", format, "json|csv|auto")
      ->check(CLI::IsMember({"json", "csv", "auto"}));

  bool render_solve = false;
  auto* render = app.add_subcommand("render", "Render a polygon to SVG");
  render->add_option("input", input, "Polygon file")->required();
  render->add_option("-o,--output", output, "Output path (default stdout)");
  render->add_option("--format", format, "json|csv|auto")
      ->check(CLI::IsMember({"json", "csv", "auto"}));
  render->add_flag("--solve", render_solve, "Overlay the solution triangle");
  render->add_option("--mode", mode, "Solver mode for --solve")
      ->check(CLI::IsMember({"linear", "quadratic-safe"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;  // bad flags are input errors
  }

  if (solve->parsed()) return run_solve(input, output, format, mode, tols);
  if (oracle->parsed()) {
    return run_oracle(input, output, format, coarse_steps, full_grid, compare,
                      gap_tol, mode, tols);
  }
  if (gen->parsed()) return run_gen(gen_n, gen_seed, output, format);
  if (check->parsed()) return run_check(input, format);
  if (render->parsed()) {
    return run_render(input, output, format, render_solve, mode);
  }
  return kExitInput;
}
