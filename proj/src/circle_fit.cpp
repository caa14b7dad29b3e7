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
#include "circle_fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace trienc {

namespace {

/// Roots of qa*t^2 + qb*t + qc = 0 in ascending order; disc is clamped to
/// zero when rounding drives it slightly negative (callers establish
/// solvability beforehand).
std::pair<double, double> solve_quadratic(double qa, double qb, double qc) {
  double disc = qb * qb - 4.0 * qa * qc;
  if (disc < 0.0) disc = 0.0;
  const double root = std::sqrt(disc);
  double t1, t2;
  if (qb >= 0.0) {
    const double q = -0.5 * (qb + root);
    t1 = q / qa;
    t2 = (q != 0.0) ? qc / q : 0.0;
  } else {
    const double q = -0.5 * (qb - root);
    t2 = q / qa;
    t1 = (q != 0.0) ? qc / q : 0.0;
  }
  if (t1 > t2) std::swap(t1, t2);
  return {t1, t2};
}

struct ExcircleCore {
  std::array<Circle, 4> candidates{};
  int selected = -1;
  double residual = std::numeric_limits<double>::infinity();
};

enum class CutStatus { ok, bad_line, parallel_arm, no_triangle };

/// Shared core of the excircle fit: offsets the cut line by +-r and the
/// first arm line by +-r, solves the four 2x2 systems and gates the
/// candidate that is tangent to the second arm across the cut line from
/// the apex.
CutStatus excircle_core(Vec2 apex, Vec2 d0, Vec2 d1, Vec2 a, Vec2 b,
                        const Tolerances& tol, ExcircleCore* out) {
  const Vec2 dl = b - a;
  if (dl.norm() <= tol.len) return CutStatus::bad_line;
  const double c0 = d0.cross(dl);
  const double c1 = d1.cross(dl);
  if (std::abs(c0) <= tol.cross || std::abs(c1) <= tol.cross) {
    return CutStatus::parallel_arm;
  }

  const double t0 = (a - apex).cross(dl) / c0;
  const double t1 = (a - apex).cross(dl) / c1;
  const Vec2 va = apex + d0 * t0;
  const Vec2 vb = apex + d1 * t1;
  if ((va - apex).norm() <= tol.len || (vb - apex).norm() <= tol.len ||
      (va - apex).dot(d0) <= 0.0 || (vb - apex).dot(d1) <= 0.0) {
    return CutStatus::no_triangle;
  }

  const double len_a = (apex - vb).norm();
  const double len_b = (va - apex).norm();
  const double len_c = (va - vb).norm();
  const double s = (len_a + len_b + len_c) / 2.0;
  if (s - len_c <= tol.len ||
      std::abs((vb - va).cross(apex - va)) <= tol.cross) {
    return CutStatus::no_triangle;
  }
  const double r = std::sqrt(s * (s - len_a) * (s - len_b) / (s - len_c));

  const Vec2 dab = vb - va;
  const Vec2 dac = apex - va;
  const double det = dab.x * dac.y - dab.y * dac.x;
  if (std::abs(det) <= tol.cross) return CutStatus::parallel_arm;
  const double bxa = vb.cross(va);
  const double cxa = apex.cross(va);
  const double apex_side = dab.cross(apex - va);

  int k = 0;
  for (const double s1 : {+1.0, -1.0}) {
    for (const double s2 : {+1.0, -1.0}) {
      const double rhs1 = bxa + s1 * r * len_c;
      const double rhs2 = cxa + s2 * r * len_b;
      const Vec2 center{(dac.x * rhs1 - dab.x * rhs2) / det,
                        (dac.y * rhs1 - dab.y * rhs2) / det};
      out->candidates[k] = Circle{center, r};
      // The excircle opposite the apex lies across the cut line from the
      // apex and is tangent to the second arm: |(C-B) x (B-I)| = r * |CB|.
      // The side constraint matters for isoceles cuts, where another
      // excircle shares the radius and ties the tangency residual.
      if (dab.cross(center - va) * apex_side < 0.0) {
        const double resid =
            std::abs(std::abs((apex - vb).cross(vb - center)) - r * len_a);
        if (resid < out->residual) {
          out->residual = resid;
          out->selected = k;
        }
      }
      ++k;
    }
  }
  return CutStatus::ok;
}

struct InscribedCore {
  std::array<Circle, 2> circles{};  // ascending radius
  std::array<double, 2> params{};   // bisector parameters
};

enum class InscribedStatus { ok, flat_wedge, no_real_roots };

InscribedStatus inscribed_core(Vec2 apex, Vec2 d0, Vec2 d1, Vec2 p,
                               const Tolerances& tol, InscribedCore* out) {
  const Vec2 va = apex + d0.normalized();
  const Vec2 vb = apex + d1.normalized();
  const double len_a = (apex - vb).norm();
  const double len_b = (va - apex).norm();
  const Vec2 bisect_pt = (va - vb) * (len_a / (len_a + len_b)) + vb;
  const Vec2 bdir = bisect_pt - apex;
  if (bdir.norm() <= tol.len) return InscribedStatus::flat_wedge;

  const double cross_term = (va - apex).cross(bdir) / len_b;
  const double qa = bdir.norm2() - cross_term * cross_term;
  const double qb = 2.0 * bdir.dot(apex - p);
  const double qc = (apex - p).norm2();
  if (qb * qb - 4.0 * qa * qc < 0.0) return InscribedStatus::no_real_roots;
  const auto [t1, t2] = solve_quadratic(qa, qb, qc);

  int k = 0;
  for (const double t : {t1, t2}) {
    const Vec2 center = apex + bdir * t;
    const double r = std::abs((va - apex).cross(apex - center)) / len_b;
    out->circles[k] = Circle{center, r};
    out->params[k] = t;
    ++k;
  }
  if (out->circles[0].radius > out->circles[1].radius) {
    std::swap(out->circles[0], out->circles[1]);
    std::swap(out->params[0], out->params[1]);
  }
  return InscribedStatus::ok;
}

}  // namespace

namespace fit_core {

std::optional<StripFrame> strip_frame(const Wedge& w, const Tolerances& tol) {
  if (!w.degenerate) return std::nullopt;
  const ParamLine arm0 = w.arm0(tol);
  const Vec2 foot = arm0.foot(w.s1);
  const double width = (w.s1 - foot).norm();
  if (width <= 2.0 * tol.len) return std::nullopt;
  return StripFrame{(w.s1 + foot) * 0.5, w.arm1_dir(), width * 0.5};
}

std::optional<StripTangent> strip_line_tangent(const StripFrame& frame,
                                               Vec2 a, Vec2 b,
                                               const Tolerances& tol) {
  const Vec2 ab = b - a;
  const double ab_norm = ab.norm();
  if (ab_norm <= tol.len) return std::nullopt;
  const double denom = ab.cross(frame.dir);
  if (std::abs(denom) <= tol.cross) return std::nullopt;
  const double base = ab.cross(a - frame.mid);
  // The -r offset root lies right of a->b regardless of orientation:
  // cross(ab, a - center) works out to +|ab| * half there.
  const double t = (base - ab_norm * frame.half) / denom;
  return StripTangent{{frame.mid + frame.dir * t, frame.half}, t};
}

std::array<StripTangent, 2> strip_point_circles(const StripFrame& frame,
                                                Vec2 p) {
  const double qa = frame.dir.norm2();
  const double qb = 2.0 * (frame.mid - p).dot(frame.dir);
  const double qc = (frame.mid - p).norm2() - frame.half * frame.half;
  const auto [t1, t2] = solve_quadratic(qa, qb, qc);
  return {StripTangent{{frame.mid + frame.dir * t1, frame.half}, t1},
          StripTangent{{frame.mid + frame.dir * t2, frame.half}, t2}};
}

std::optional<Circle> cut_excircle(Vec2 apex, Vec2 d0, Vec2 d1, Vec2 a,
                                   Vec2 b, const Tolerances& tol) {
  ExcircleCore core;
  if (excircle_core(apex, d0, d1, a, b, tol, &core) != CutStatus::ok ||
      core.selected < 0 || core.residual > tol.residual) {
    return std::nullopt;
  }
  return core.candidates[static_cast<std::size_t>(core.selected)];
}

std::optional<std::array<Circle, 2>> inscribed_pair(Vec2 apex, Vec2 d0,
                                                    Vec2 d1, Vec2 p,
                                                    const Tolerances& tol) {
  InscribedCore core;
  if (inscribed_core(apex, d0, d1, p, tol, &core) != InscribedStatus::ok) {
    return std::nullopt;
  }
  return core.circles;
}

}  // namespace fit_core

FitResult fit_degenerate_wedge_line(const Wedge& w, Vec2 a, Vec2 b,
                                    const Tolerances& tol) {
  if (!w.degenerate) {
    throw Error(Errc::not_degenerate, "wedge arms are not parallel");
  }
  const auto frame = fit_core::strip_frame(w, tol);
  if (!frame) {
    throw Error(Errc::degenerate_wedge, "wedge arms coincide");
  }
  const Vec2 ab = b - a;
  const double ab_norm = ab.norm();
  if (ab_norm <= tol.len) {
    throw Error(Errc::degenerate_line, "line through coincident points");
  }
  const double denom = ab.cross(frame->dir);
  if (std::abs(denom) <= tol.cross) {
    throw Error(Errc::line_parallel_to_arms,
                "line does not cross the strip");
  }

  const double base = ab.cross(a - frame->mid);
  FitResult out;
  double sds[2];
  int i = 0;
  for (const double sign : {+1.0, -1.0}) {
    const double t = (base + sign * ab_norm * frame->half) / denom;
    const Circle c{frame->mid + frame->dir * t, frame->half};
    out.candidates.push_back(c);
    out.params.push_back(t);
    sds[i++] = ab.cross(a - c.center) / ab_norm;
  }
  if (out.params[0] > out.params[1]) {
    std::swap(out.params[0], out.params[1]);
    std::swap(out.candidates[0], out.candidates[1]);
    std::swap(sds[0], sds[1]);
  }
  for (std::size_t k = 0; k < 2; ++k) {
    if (sds[k] > 0.0) {
      out.selected = out.candidates[k];
      out.selected_index = k;
      out.selection_residual = std::abs(sds[k] - frame->half);
      break;
    }
  }
  return out;
}

FitResult fit_degenerate_wedge_point(const Wedge& w, Vec2 p,
                                     const Tolerances& tol) {
  if (!w.degenerate) {
    throw Error(Errc::not_degenerate, "wedge arms are not parallel");
  }
  const auto frame = fit_core::strip_frame(w, tol);
  if (!frame) {
    throw Error(Errc::degenerate_wedge, "wedge arms coincide");
  }
  const ParamLine midline{frame->mid, frame->mid + frame->dir, tol};
  if (std::abs(midline.signed_distance(p)) > frame->half + tol.residual) {
    throw Error(Errc::point_outside_wedge,
                "point is not between the wedge arms");
  }

  const auto roots = fit_core::strip_point_circles(*frame, p);
  FitResult out;
  for (const auto& root : roots) {
    out.candidates.push_back(root.circle);
    out.params.push_back(root.param);
  }
  return out;
}

FitResult fit_wedge_line_excircle(const Wedge& w, Vec2 a, Vec2 b,
                                  const Tolerances& tol) {
  if (w.degenerate) {
    throw Error(Errc::degenerate_wedge, "excircle fit needs a proper wedge");
  }
  const ParamLine line{a, b, tol};
  const Vec2 apex = w.apex(tol);
  ExcircleCore core;
  switch (excircle_core(apex, w.arm0_dir(), w.arm1_dir(), a, b, tol, &core)) {
    case CutStatus::bad_line:
      throw Error(Errc::degenerate_line, "line through coincident points");
    case CutStatus::parallel_arm:
      throw Error(Errc::line_parallel_to_arm,
                  "line is parallel to a wedge arm");
    case CutStatus::no_triangle:
      throw Error(Errc::no_triangle, "line does not cross both arms");
    case CutStatus::ok:
      break;
  }

  FitResult out;
  out.candidates.assign(core.candidates.begin(), core.candidates.end());
  out.selection_residual = core.residual;
  if (core.selected < 0 || core.residual > tol.residual) {
    throw Error(Errc::selection_failed,
                "no excircle candidate is tangent to the second arm");
  }
  out.selected_index = static_cast<std::size_t>(core.selected);
  out.selected = out.candidates[*out.selected_index];
  return out;
}

FitResult fit_wedge_point_incircle(const Wedge& w, Vec2 p,
                                   const Tolerances& tol) {
  if (w.degenerate) {
    throw Error(Errc::degenerate_wedge, "incircle fit needs a proper wedge");
  }
  const Vec2 apex = w.apex(tol);
  const Vec2 u0 = w.arm0_dir().normalized();
  const Vec2 u1 = w.arm1_dir().normalized();

  // Strictly inside means clear of both arm lines, on the span side.
  const double span = u0.cross(u1);
  const Vec2 rel = p - apex;
  const double alpha = rel.cross(u1) / span;
  const double beta = u0.cross(rel) / span;
  if (alpha * std::abs(span) <= tol.residual ||
      beta * std::abs(span) <= tol.residual) {
    throw Error(Errc::point_outside_wedge,
                "point is not strictly inside the wedge");
  }

  InscribedCore core;
  switch (inscribed_core(apex, u0, u1, p, tol, &core)) {
    case InscribedStatus::flat_wedge:
      throw Error(Errc::degenerate_wedge, "wedge opens onto a straight line");
    case InscribedStatus::no_real_roots:
      throw Error(Errc::no_real_roots,
                  "no inscribed circle through the point");
    case InscribedStatus::ok:
      break;
  }

  FitResult out;
  out.candidates.assign(core.circles.begin(), core.circles.end());
  out.params.assign(core.params.begin(), core.params.end());
  out.selected = out.candidates[1];  // the larger circle
  out.selected_index = 1;
  out.selection_residual =
      std::abs((out.selected->center - p).norm() - out.selected->radius);
  return out;
}

}  // namespace trienc
