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
#include "enclosing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace trienc {

namespace {

// Polygon boundary elements interleave vertices and edges on a cycle of
// length 2n: element 2i is vertex i, element 2i+1 the edge i -> i+1.
constexpr std::size_t vert_elem(std::size_t i) { return 2 * i; }
constexpr std::size_t edge_elem(std::size_t i) { return 2 * i + 1; }
constexpr bool elem_is_vertex(std::size_t e) { return (e & 1) == 0; }
constexpr std::size_t elem_index(std::size_t e) { return e >> 1; }

constexpr int kScanLookback = 2;

// Vertices closer than this to a wedge arm line are not vertex-tangent
// closing candidates (normalized units). Keeps the tangent-line candidates
// well conditioned; boundary optima are still reachable through the
// adjacent edge candidates' tolerance band.
constexpr double kArmMargin = 1e-7;

struct Accepted {
  ClosingSide side;
  Triangle tri;
  double perimeter;
};

struct BootCandidate {
  ClosingSide side;
  double root_param;  // quadratic/ratio parameter, for deterministic ties
  std::size_t elem;
  bool post;  // contact lies counterclockwise after the base edge
};

Triangle ccw_triangle(Vec2 a, Vec2 b, Vec2 c) {
  if ((b - a).cross(c - a) < 0.0) std::swap(b, c);
  return Triangle{a, b, c};
}

/// Apex plus unit arm directions pointing from the apex into the wedge.
struct FitWedge {
  Vec2 apex;
  Vec2 u_base;
  Vec2 u_other;
};

class Engine {
 public:
  Engine(const ConvexPolygon& poly, const SolveOptions& opts)
      : poly_(poly),
        opts_(opts),
        tol_(opts.tol),
        n_(poly.size()),
        m_(2 * poly.size()) {}

  struct EdgeOutcome {
    Triangle tri;
    double perimeter;
    int flips;
    bool exceeded;
  };

  /// A wedge around the polygon: the base edge plus two tangent sides with
  /// known chain roles. `curr` is the side the next closing step replaces
  /// the counterpart of.
  struct RunState {
    ClosingSide other;
    bool other_post;
    ClosingSide curr;
    bool curr_post;
    Triangle tri;
    double perimeter;
  };

  struct BootChoice {
    BootCandidate cand;
    Accepted closure;
  };

  EdgeOutcome run_edge(std::size_t e) {
    bool warm = false;
    std::optional<RunState> state;
    if (opts_.mode == SolveMode::linear) {
      state = warm_start(e);
      warm = state.has_value();
    }
    if (!state) state = boot_state(e);

    std::vector<double> trace;
    if (opts_.flip_traces != nullptr) trace.push_back(state->perimeter);
    int flips = 0;
    bool exceeded = false;
    for (int k = 0;; ++k) {
      if (k >= opts_.max_flips) {
        exceeded = true;
        break;
      }
      std::optional<Accepted> acc = close_step(e, state->curr,
                                               state->curr_post);
      if (!acc && warm && flips == 0) {
        // The carried-over start went numerically sour; restart this edge
        // from its own bootstrap.
        warm = false;
        state = boot_state(e);
        if (opts_.flip_traces != nullptr) trace.assign(1, state->perimeter);
        k = -1;
        continue;
      }
      if (!acc) {
        throw Error(Errc::no_closing_side,
                    "wedge flipping found no closing side");
      }
      if (acc->perimeter < state->perimeter - tol_.improve) {
        state->other = state->curr;
        state->other_post = state->curr_post;
        state->curr = acc->side;
        state->curr_post = !state->curr_post;
        state->tri = acc->tri;
        state->perimeter = acc->perimeter;
        if (opts_.flip_traces != nullptr) trace.push_back(acc->perimeter);
        ++flips;
      } else {
        break;
      }
    }
    if (opts_.flip_traces != nullptr) {
      opts_.flip_traces->push_back(std::move(trace));
    }

    // Remember the converged sides; the next edge starts from them.
    if (state->curr_post) {
      last_post_ = state->curr;
      last_pre_ = state->other;
    } else {
      last_post_ = state->other;
      last_pre_ = state->curr;
    }
    return {state->tri, state->perimeter, flips, exceeded};
  }

  RunState boot_state(std::size_t e) {
    BootChoice choice = bootstrap_choice(e);
    return RunState{choice.cand.side,    choice.cand.post,
                    choice.closure.side, !choice.cand.post,
                    choice.closure.tri,  choice.closure.perimeter};
  }

  /// Seeds the run with the previous edge's converged sides when they are
  /// still in a valid chain position for edge e. This is what makes the
  /// linear mode linear: contacts only creep forward as the base edge
  /// advances, while a fresh strip bootstrap would re-walk a constant
  /// fraction of the polygon every edge.
  std::optional<RunState> warm_start(std::size_t e) {
    if (!last_post_ || !last_pre_) return std::nullopt;
    const std::size_t origin = vert_elem((e + 1) % n_);
    const auto pos = [&](std::size_t elem) {
      return (elem + m_ - origin) % m_;
    };
    const std::size_t post_c = contact_elem(*last_post_);
    const std::size_t pre_c = contact_elem(*last_pre_);
    // Both contacts must sit strictly between the base edge's endpoints in
    // counterclockwise order, post before pre.
    if (pos(post_c) >= pos(pre_c) || pos(pre_c) > m_ - 2) {
      return std::nullopt;
    }
    const Vec2 db = poly_.edge_vec(e).normalized();
    if (std::abs(db.cross(last_pre_->line.direction().normalized())) <=
        tol_.cross) {
      return std::nullopt;
    }
    std::optional<Accepted> acc = close_step(e, *last_pre_, false);
    if (!acc) return std::nullopt;
    return RunState{*last_pre_, false, acc->side, true, acc->tri,
                    acc->perimeter};
  }

  static std::size_t contact_elem(const ClosingSide& side) {
    return side.kind == ClosingSide::Kind::flush_edge
               ? edge_elem(side.index)
               : vert_elem(side.index);
  }

  BootChoice bootstrap_choice(std::size_t e) {
    const Vec2 base_a = poly_.vertex(e);
    const Vec2 base_b = poly_.vertex_cyclic(e + 1);
    const Vec2 base_dir = base_b - base_a;
    const std::size_t anti = antipodal_for(e);
    const Vec2 va = poly_.vertex(anti);
    const Wedge strip =
        Wedge::from_arms(base_a, base_b, va, va - base_dir, tol_);
    const auto frame = fit_core::strip_frame(strip, tol_);
    if (!frame) {
      throw Error(Errc::degenerate_wedge, "bootstrap strip has no width");
    }

    const std::size_t post_begin = vert_elem((e + 1) % n_);
    const std::size_t post_end = vert_elem(anti);
    const std::size_t pre_begin = vert_elem(anti);
    const std::size_t pre_end = vert_elem(e);

    std::vector<BootCandidate> cands;
    if (opts_.mode == SolveMode::linear) {
      scan_boot_linear(*frame, base_dir, post_begin, post_end, true,
                       &boot_post_, &cands);
      scan_boot_linear(*frame, base_dir, pre_begin, pre_end, false,
                       &boot_pre_, &cands);
    } else {
      scan_boot_full(*frame, base_dir, post_begin, post_end, true, &cands);
      scan_boot_full(*frame, base_dir, pre_begin, pre_end, false, &cands);
    }
    if (cands.empty()) {
      throw Error(Errc::no_closing_side,
                  "bootstrap found no closing side; polygon invalid?");
    }

    // Each candidate is scored by the perimeter after one closing step.
    const std::size_t save_post = close_post_;
    const std::size_t save_pre = close_pre_;
    std::size_t best_post = save_post;
    std::size_t best_pre = save_pre;
    std::optional<BootChoice> best;
    for (const BootCandidate& bc : cands) {
      close_post_ = save_post;
      close_pre_ = save_pre;
      std::optional<Accepted> acc = close_step(e, bc.side, bc.post);
      if (!acc) continue;
      const bool better =
          !best || acc->perimeter < best->closure.perimeter ||
          (acc->perimeter == best->closure.perimeter &&
           (bc.root_param < best->cand.root_param ||
            (bc.root_param == best->cand.root_param &&
             bc.elem < best->cand.elem)));
      if (better) {
        best = BootChoice{bc, *acc};
        best_post = close_post_;
        best_pre = close_pre_;
      }
    }
    close_post_ = best_post;
    close_pre_ = best_pre;
    if (!best) {
      throw Error(Errc::no_closing_side,
                  "no bootstrap candidate admits a closing step");
    }
    return *best;
  }

  /// Closes the wedge (base edge e, side). side_is_post tells which side of
  /// the base edge the current side touches, which fixes the scan chain and
  /// the from-apex arm directions.
  std::optional<Accepted> close_step(std::size_t e, const ClosingSide& side,
                                     bool side_is_post) {
    const ParamLine base_line = poly_.edge_line(e, tol_);
    const ParamLine& other_line = side.line;
    const Vec2 db = base_line.direction().normalized();
    const Vec2 ds = other_line.direction().normalized();
    const double denom = db.cross(ds);
    if (std::abs(denom) <= tol_.cross) return std::nullopt;
    const Vec2 apex =
        base_line.origin() +
        db * (other_line.origin() - base_line.origin()).cross(ds) / denom;
    // Traversal order at the shared apex: the incoming side points
    // backward, the outgoing side forward.
    const FitWedge fw{apex, side_is_post ? -db : db,
                      side_is_post ? ds : -ds};

    const std::size_t contact = contact_elem(side);
    std::size_t begin, end;
    std::size_t* hint;
    if (side_is_post) {
      begin = next_elem(contact);
      end = vert_elem(e);
      hint = &close_pre_;
    } else {
      begin = vert_elem((e + 1) % n_);
      end = prev_elem(contact);
      hint = &close_post_;
    }
    if (opts_.mode == SolveMode::linear) {
      return scan_close_linear(fw, base_line, other_line, begin, end, hint);
    }
    return scan_close_full(fw, base_line, other_line, begin, end);
  }

  std::optional<Accepted> scan_close_linear(const FitWedge& fw,
                                            const ParamLine& base_line,
                                            const ParamLine& other_line,
                                            std::size_t begin, std::size_t end,
                                            std::size_t* hint) {
    std::size_t start = begin;
    if (in_chain(*hint, begin, end)) {
      start = *hint;
      for (int k = 0; k < kScanLookback && start != begin; ++k) {
        start = prev_elem(start);
      }
    } else {
      ++steps_;
    }
    for (std::size_t el = start;; el = next_elem(el)) {
      ++steps_;
      if (auto acc = try_close(el, fw, base_line, other_line)) {
        *hint = el;
        return acc;
      }
      if (el == end) break;
    }
    if (start != begin) {  // monotone hint overshot; rescan the chain
      for (std::size_t el = begin;; el = next_elem(el)) {
        ++steps_;
        if (auto acc = try_close(el, fw, base_line, other_line)) {
          *hint = el;
          return acc;
        }
        if (el == end) break;
      }
    }
    return std::nullopt;
  }

  std::optional<Accepted> scan_close_full(const FitWedge& fw,
                                          const ParamLine& base_line,
                                          const ParamLine& other_line,
                                          std::size_t begin, std::size_t end) {
    std::optional<Accepted> best;
    for (std::size_t el = begin;; el = next_elem(el)) {
      ++steps_;
      if (auto acc = try_close(el, fw, base_line, other_line)) {
        if (!best || acc->perimeter < best->perimeter) best = acc;
      }
      if (el == end) break;
    }
    return best;
  }

  std::optional<Accepted> try_close(std::size_t el, const FitWedge& fw,
                                    const ParamLine& base_line,
                                    const ParamLine& other_line) {
    std::optional<ClosingSide> side =
        elem_is_vertex(el) ? try_close_vertex(elem_index(el), fw)
                           : try_close_edge(elem_index(el), fw);
    if (!side) return std::nullopt;
    const auto p_base = meet(side->line, base_line);
    const auto p_other = meet(side->line, other_line);
    if (!p_base || !p_other) return std::nullopt;
    const Triangle tri = ccw_triangle(fw.apex, *p_base, *p_other);
    return Accepted{*side, tri, tri.perimeter()};
  }

  static std::optional<Vec2> meet(const ParamLine& l1, const ParamLine& l2) {
    const Vec2 d1 = l1.direction();
    const Vec2 d2 = l2.direction();
    const double denom = d1.cross(d2);
    if (denom == 0.0) return std::nullopt;
    return l1.origin() + d1 * ((l2.origin() - l1.origin()).cross(d2) / denom);
  }

  std::optional<ClosingSide> try_close_edge(std::size_t j,
                                            const FitWedge& fw) {
    const Vec2 a = poly_.vertex(j);
    const Vec2 b = poly_.vertex_cyclic(j + 1);
    const Vec2 d = (b - a).normalized();
    if (std::abs(d.cross(fw.u_base)) <= tol_.cross ||
        std::abs(d.cross(fw.u_other)) <= tol_.cross) {
      return std::nullopt;
    }
    const auto excircle =
        fit_core::cut_excircle(fw.apex, fw.u_base, fw.u_other, a, b, tol_);
    if (!excircle) return std::nullopt;
    const Vec2 ab = b - a;
    const double t = (excircle->center - a).dot(ab) / ab.norm2();
    if (t < -tol_.residual || t > 1.0 + tol_.residual) return std::nullopt;
    return ClosingSide{ClosingSide::Kind::flush_edge, j, *excircle,
                       ParamLine{a, b, tol_}};
  }

  std::optional<ClosingSide> try_close_vertex(std::size_t j,
                                              const FitWedge& fw) {
    const Vec2 p = poly_.vertex(j);
    const double span = fw.u_base.cross(fw.u_other);
    const Vec2 rel = p - fw.apex;
    const double alpha = rel.cross(fw.u_other) / span;
    const double beta = fw.u_base.cross(rel) / span;
    const double margin = std::abs(span);
    if (alpha * margin <= kArmMargin || beta * margin <= kArmMargin) {
      return std::nullopt;
    }
    const auto circles =
        fit_core::inscribed_pair(fw.apex, fw.u_base, fw.u_other, p, tol_);
    if (!circles) return std::nullopt;
    // Directing the tangent as perp(center - p) puts the witness circle on
    // the non-polygon side by construction, so the vertex cone test alone
    // decides acceptance. The larger circle is the generic witness; right
    // at the flush transition it can flip to the grazing side and the
    // smaller root carries the closing instead.
    for (const std::size_t k : {std::size_t{1}, std::size_t{0}}) {
      const Circle& circle = (*circles)[k];
      Vec2 u = (circle.center - p).perp();
      if (u.norm() <= tol_.len) continue;
      u = u.normalized();
      if (std::abs(u.cross(fw.u_base)) <= tol_.cross ||
          std::abs(u.cross(fw.u_other)) <= tol_.cross) {
        continue;
      }
      if (!is_tangent_at_vertex(poly_, j, u, tol_)) continue;
      return ClosingSide{ClosingSide::Kind::vertex_tangent, j, circle,
                         ParamLine{p, p + u, tol_}};
    }
    return std::nullopt;
  }

  void scan_boot_full(const fit_core::StripFrame& strip, Vec2 base_dir,
                      std::size_t begin, std::size_t end, bool post,
                      std::vector<BootCandidate>* out) {
    for (std::size_t el = begin;; el = next_elem(el)) {
      ++steps_;
      try_boot(el, strip, base_dir, post, out);
      if (el == end) break;
    }
  }

  void scan_boot_linear(const fit_core::StripFrame& strip, Vec2 base_dir,
                        std::size_t begin, std::size_t end, bool post,
                        std::size_t* hint,
                        std::vector<BootCandidate>* out) {
    std::size_t start = begin;
    if (in_chain(*hint, begin, end)) {
      start = *hint;
      for (int k = 0; k < kScanLookback && start != begin; ++k) {
        start = prev_elem(start);
      }
    } else {
      ++steps_;
    }
    for (std::size_t el = start;; el = next_elem(el)) {
      ++steps_;
      const std::size_t before = out->size();
      try_boot(el, strip, base_dir, post, out);
      if (out->size() > before) {
        *hint = el;
        return;
      }
      if (el == end) break;
    }
    if (start != begin) {
      for (std::size_t el = begin;; el = next_elem(el)) {
        ++steps_;
        const std::size_t before = out->size();
        try_boot(el, strip, base_dir, post, out);
        if (out->size() > before) {
          *hint = el;
          return;
        }
        if (el == end) break;
      }
    }
  }

  void try_boot(std::size_t el, const fit_core::StripFrame& strip,
                Vec2 base_dir, bool post, std::vector<BootCandidate>* out) {
    const Vec2 bd = base_dir.normalized();
    if (elem_is_vertex(el)) {
      const std::size_t j = elem_index(el);
      const Vec2 p = poly_.vertex(j);
      // A vertex on (or nearly on) an arm gives the double-root circle
      // whose tangent is parallel to the arms; it can never close the
      // strip, and the nearly-parallel numerical splits of that root
      // destabilize everything downstream. Require a real margin.
      const double off =
          std::abs(strip.dir.cross(strip.mid - p)) / strip.dir.norm();
      if (strip.half - off <= kArmMargin) return;
      for (const auto& root : fit_core::strip_point_circles(strip, p)) {
        // Witness beyond the closing side, as in try_close_vertex.
        Vec2 u = (root.circle.center - p).perp();
        if (u.norm() <= tol_.len) continue;
        u = u.normalized();
        if (std::abs(u.cross(bd)) <= tol_.cross) continue;
        if (!is_tangent_at_vertex(poly_, j, u, tol_)) continue;
        out->push_back({ClosingSide{ClosingSide::Kind::vertex_tangent, j,
                                    root.circle, ParamLine{p, p + u, tol_}},
                        root.param, el, post});
      }
    } else {
      const std::size_t j = elem_index(el);
      const Vec2 a = poly_.vertex(j);
      const Vec2 b = poly_.vertex_cyclic(j + 1);
      if (std::abs((b - a).normalized().cross(bd)) <= tol_.cross) return;
      const auto tangent = fit_core::strip_line_tangent(strip, a, b, tol_);
      if (!tangent) return;
      const Vec2 ab = b - a;
      const double t = (tangent->circle.center - a).dot(ab) / ab.norm2();
      if (t < -tol_.residual || t > 1.0 + tol_.residual) return;
      out->push_back({ClosingSide{ClosingSide::Kind::flush_edge, j,
                                  tangent->circle, ParamLine{a, b, tol_}},
                      tangent->param, el, post});
    }
  }

  std::size_t antipodal_for(std::size_t e) {
    if (opts_.mode == SolveMode::quadratic_safe) {
      return antipodal_vertex(poly_, e);
    }
    const Vec2 a = poly_.vertex(e);
    const Vec2 d = poly_.edge_vec(e);
    const auto height = [&](std::size_t i) {
      return std::abs(d.cross(a - poly_.vertex(i)));
    };
    // The rotating advance is only valid from a pointer at or before the
    // peak of the current edge's height function; seed it once.
    if (!antipodal_seeded_) {
      antipodal_ = antipodal_vertex(poly_, e);
      antipodal_seeded_ = true;
      steps_ += n_;
      return antipodal_;
    }
    std::size_t guard = 0;
    while (guard++ <= n_ &&
           height((antipodal_ + 1) % n_) >= height(antipodal_)) {
      antipodal_ = (antipodal_ + 1) % n_;
      ++steps_;
    }
    if (height((antipodal_ + n_ - 1) % n_) > height(antipodal_)) {
      // Stale pointer landed in a descending stretch; re-seed.
      antipodal_ = antipodal_vertex(poly_, e);
      steps_ += n_;
    }
    return antipodal_;
  }

  std::size_t next_elem(std::size_t e) const { return (e + 1) % m_; }
  std::size_t prev_elem(std::size_t e) const { return (e + m_ - 1) % m_; }
  bool in_chain(std::size_t e, std::size_t begin, std::size_t end) const {
    return (e + m_ - begin) % m_ <= (end + m_ - begin) % m_;
  }

  std::uint64_t steps() const { return steps_; }

  std::optional<Accepted> close_raw(const FitWedge& fw,
                                    const ParamLine& arm0,
                                    const ParamLine& arm1, std::size_t begin,
                                    std::size_t end,
                                    std::optional<std::size_t> hint) {
    if (hint) {
      std::size_t h = *hint % m_;
      return scan_close_linear(fw, arm0, arm1, begin, end, &h);
    }
    return scan_close_full(fw, arm0, arm1, begin, end);
  }

 private:
  const ConvexPolygon& poly_;
  SolveOptions opts_;
  Tolerances tol_;
  std::size_t n_;
  std::size_t m_;

  // Monotone scan pointers, persisted across the per-edge runs.
  std::size_t antipodal_ = 0;
  bool antipodal_seeded_ = false;
  std::size_t boot_post_ = 0;
  std::size_t boot_pre_ = 0;
  std::size_t close_post_ = 0;
  std::size_t close_pre_ = 0;
  // Converged sides of the previous per-edge run (linear mode warm start).
  std::optional<ClosingSide> last_post_;
  std::optional<ClosingSide> last_pre_;
  std::uint64_t steps_ = 0;
};

}  // namespace

BootstrapResult bootstrap(const ConvexPolygon& poly, std::size_t edge_index,
                          const Tolerances& tol) {
  if (edge_index >= poly.size()) {
    throw Error(Errc::bad_argument, "edge index out of range");
  }
  SolveOptions opts;
  opts.mode = SolveMode::quadratic_safe;
  opts.tol = tol;
  Engine eng(poly, opts);
  const auto choice = eng.bootstrap_choice(edge_index);
  const ClosingSide& side = choice.cand.side;
  const Wedge w = Wedge::from_arms(
      poly.vertex(edge_index), poly.vertex_cyclic(edge_index + 1),
      side.line.origin(), side.line.through(), tol);
  return BootstrapResult{w, side};
}

namespace {

/// Contact element of a line tangent to the polygon: the flush edge when
/// two adjacent vertices touch, otherwise the single touching vertex.
std::size_t find_contact(const ConvexPolygon& poly, const ParamLine& line,
                         const Tolerances& tol) {
  const std::size_t n = poly.size();
  std::vector<std::size_t> touching;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(line.signed_distance(poly.vertex(i))) <= tol.residual) {
      touching.push_back(i);
    }
  }
  if (touching.empty()) {
    throw Error(Errc::bad_argument, "wedge arm is not tangent to the polygon");
  }
  if (touching.size() == 1) return vert_elem(touching[0]);
  if (touching.size() == 2) {
    const std::size_t a = touching[0], b = touching[1];
    if (b == a + 1) return edge_elem(a);
    if (a == 0 && b == n - 1) return edge_elem(b);
  }
  throw Error(Errc::bad_argument,
              "wedge arm touches the polygon on disconnected elements");
}

}  // namespace

ClosingSide close_wedge(const ConvexPolygon& poly, const Wedge& w,
                        std::optional<std::size_t> hint,
                        const Tolerances& tol) {
  if (w.degenerate) {
    throw Error(Errc::degenerate_wedge, "closing needs a proper wedge");
  }
  const Vec2 apex = w.apex(tol);
  const ParamLine arm0 = w.arm0(tol);
  const ParamLine arm1 = w.arm1(tol);
  const std::size_t c0 = find_contact(poly, arm0, tol);
  const std::size_t c1 = find_contact(poly, arm1, tol);

  // Orient both arms from the apex so the polygon sits in their positive
  // span.
  const Vec2 mean = poly.vertex_mean() - apex;
  const Vec2 d0 = arm0.direction().normalized();
  const Vec2 d1 = arm1.direction().normalized();
  std::optional<FitWedge> fw;
  for (const double s0 : {+1.0, -1.0}) {
    for (const double s1 : {+1.0, -1.0}) {
      const Vec2 u0 = d0 * s0;
      const Vec2 u1 = d1 * s1;
      const double span = u0.cross(u1);
      if (mean.cross(u1) / span > 0.0 && u0.cross(mean) / span > 0.0) {
        fw = FitWedge{apex, u0, u1};
        break;
      }
    }
    if (fw) break;
  }
  if (!fw) {
    throw Error(Errc::bad_argument, "polygon is not inside the wedge");
  }

  const std::size_t m = 2 * poly.size();
  std::size_t begin, end;
  if (fw->u_base.cross(fw->u_other) > 0.0) {
    begin = (c0 + 1) % m;
    end = (c1 + m - 1) % m;
  } else {
    begin = (c1 + 1) % m;
    end = (c0 + m - 1) % m;
  }

  SolveOptions opts;
  opts.mode = SolveMode::quadratic_safe;
  opts.tol = tol;
  Engine eng(poly, opts);
  std::optional<Accepted> acc =
      eng.close_raw(*fw, arm0, arm1, begin, end, hint);
  if (!acc) {
    throw Error(Errc::no_closing_side, "no closing side accepted");
  }
  return acc->side;
}

std::pair<Triangle, int> solve_for_edge(const ConvexPolygon& poly,
                                        std::size_t edge_index,
                                        const SolveOptions& opts) {
  if (edge_index >= poly.size()) {
    throw Error(Errc::bad_argument, "edge index out of range");
  }
  Engine eng(poly, opts);
  const auto out = eng.run_edge(edge_index);
  return {out.tri, out.flips};
}

SolveReport solve(const ConvexPolygon& poly, const SolveOptions& opts) {
  const std::size_t n = poly.size();
  SolveReport rep;
  rep.mode = opts.mode;

  if (n == 3) {  // a triangle is its own minimal enclosing triangle
    rep.best = Triangle{poly.vertex(0), poly.vertex(1), poly.vertex(2)};
    rep.perimeter = rep.best.perimeter();
    rep.flush_edge = 0;
    rep.per_edge_perimeters.assign(3, rep.perimeter);
    rep.flip_counts.assign(3, 0);
    return rep;
  }

  const Frame frame = Frame::of(poly);
  const ConvexPolygon local = normalized_copy(poly, frame);
  Engine eng(local, opts);

  rep.per_edge_perimeters.resize(n);
  rep.flip_counts.resize(n);
  double best_p = std::numeric_limits<double>::infinity();
  std::size_t best_e = 0;
  Triangle best_tri{};
  for (std::size_t e = 0; e < n; ++e) {
    const auto out = eng.run_edge(e);
    rep.per_edge_perimeters[e] = out.perimeter * frame.scale;
    rep.flip_counts[e] = out.flips;
    rep.max_flips_exceeded = rep.max_flips_exceeded || out.exceeded;
    if (out.perimeter < best_p) {
      best_p = out.perimeter;
      best_e = e;
      best_tri = out.tri;
    }
  }

  rep.flush_edge = best_e;
  rep.best = Triangle{frame.to_world(best_tri.va), frame.to_world(best_tri.vb),
                      frame.to_world(best_tri.vc)};
  rep.perimeter = rep.best.perimeter();
  rep.advance_steps = eng.steps();
  return rep;
}

}  // namespace trienc
