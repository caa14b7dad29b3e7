#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "circle_fit.hpp"
#include "support.hpp"

using namespace trienc;
using trienc::test::Rng;

namespace {

Wedge strip_x0_x2() {
  return Wedge::from_arms({0, 0}, {0, 1}, {2, 0}, {2, 1});
}

double line_distance(Vec2 a, Vec2 b, Vec2 p) {
  return std::abs(signed_point_line_distance(a, b, p));
}

}  // namespace

TEST_CASE("degenerate wedge + line: golden construction") {
  const Wedge w = Wedge::from_arms({0, 2}, {0, 7}, {4, 4}, {4, 10});
  REQUIRE(w.degenerate);
  const FitResult fit =
      fit_degenerate_wedge_line(w, {0, 16.0 / 3.0}, {4, 8});
  REQUIRE(fit.candidates.size() == 2);
  CHECK(fit.candidates[0].center.x == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(fit.candidates[0].center.y ==
        doctest::Approx(4.26296581635734).epsilon(1e-12));
  CHECK(fit.candidates[1].center.x == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(fit.candidates[1].center.y ==
        doctest::Approx(9.070367516975992).epsilon(1e-12));
  CHECK(fit.candidates[0].radius == doctest::Approx(2.0));
  CHECK(fit.candidates[1].radius == doctest::Approx(2.0));
  // The candidate right of the directed line is the selected one.
  REQUIRE(fit.selected.has_value());
  CHECK(fit.selected->center.y == doctest::Approx(4.26296581635734));
  CHECK(fit.selection_residual <= 1e-9);
}

TEST_CASE("degenerate wedge + line: 45-degree and perpendicular lines") {
  const Wedge w = strip_x0_x2();
  const FitResult diag = fit_degenerate_wedge_line(w, {0, 0}, {2, 2});
  REQUIRE(diag.candidates.size() == 2);
  CHECK(diag.candidates[0].center.x == doctest::Approx(1.0));
  CHECK(diag.candidates[0].center.y ==
        doctest::Approx(1.0 - std::numbers::sqrt2));
  CHECK(diag.candidates[1].center.y ==
        doctest::Approx(1.0 + std::numbers::sqrt2));
  CHECK(diag.candidates[0].radius == doctest::Approx(1.0));

  const FitResult perp = fit_degenerate_wedge_line(w, {0, 0}, {2, 0});
  CHECK(perp.candidates[0].center.y == doctest::Approx(-1.0));
  CHECK(perp.candidates[1].center.y == doctest::Approx(1.0));
  CHECK(perp.candidates[0].center.x == doctest::Approx(1.0));
}

TEST_CASE("degenerate wedge + line: errors") {
  const Wedge proper = Wedge::from_arms({0, 0}, {1, 0}, {0, 0}, {0, 1});
  CHECK_THROWS_WITH_AS(fit_degenerate_wedge_line(proper, {0, 0}, {1, 1}),
                       "wedge arms are not parallel", Error);
  const Wedge w = strip_x0_x2();
  CHECK_THROWS_AS(fit_degenerate_wedge_line(w, {1, 0}, {1, 5}), Error);
}

TEST_CASE("degenerate wedge + point: golden construction") {
  const Wedge w = Wedge::from_arms({0, 2}, {0, 7}, {4, 4}, {4, 10});
  const FitResult fit = fit_degenerate_wedge_point(w, {2.75, 6.1});
  REQUIRE(fit.candidates.size() == 2);
  CHECK(fit.candidates[0].center.x == doctest::Approx(2.0));
  CHECK(fit.candidates[0].center.y ==
        doctest::Approx(4.245950378226084).epsilon(1e-12));
  CHECK(fit.candidates[1].center.y ==
        doctest::Approx(7.954049621773915).epsilon(1e-12));
  CHECK(fit.candidates[0].radius == doctest::Approx(2.0));
}

TEST_CASE("degenerate wedge + point: midline point and double root") {
  const Wedge w = strip_x0_x2();
  const FitResult mid = fit_degenerate_wedge_point(w, {1, 0});
  CHECK(mid.candidates[0].center.y == doctest::Approx(-1.0));
  CHECK(mid.candidates[1].center.y == doctest::Approx(1.0));

  const FitResult on_arm = fit_degenerate_wedge_point(w, {0, 0});
  CHECK(on_arm.candidates[0].center.x == doctest::Approx(1.0));
  CHECK(on_arm.candidates[0].center.y == doctest::Approx(0.0));
  CHECK(on_arm.candidates[1].center.x == doctest::Approx(1.0));
  CHECK(on_arm.candidates[1].center.y == doctest::Approx(0.0));

  CHECK_THROWS_WITH_AS(fit_degenerate_wedge_point(w, {3.1, 0}),
                       "point is not between the wedge arms", Error);
}

TEST_CASE("degenerate wedge + point: two roots for strictly interior points") {
  Rng rng(21);
  for (int i = 0; i < 2000; ++i) {
    const double phi = rng.uniform(0, 2 * std::numbers::pi);
    const Vec2 d{std::cos(phi), std::sin(phi)};
    const Vec2 n = d.perp();
    const Vec2 mid = rng.point(-3, 3);
    const double r = rng.uniform(0.2, 2.0);
    const Wedge w = Wedge::from_arms(mid + n * r, mid + n * r + d,
                                     mid - n * r, mid - n * r - d);
    const double off = rng.uniform(-0.95, 0.95) * r;
    const Vec2 p = mid + n * off + d * rng.uniform(-2, 2);
    const FitResult fit = fit_degenerate_wedge_point(w, p);
    REQUIRE(fit.candidates.size() == 2);
    const Vec2 c0 = fit.candidates[0].center;
    const Vec2 c1 = fit.candidates[1].center;
    CHECK((c0 - c1).norm() > 1e-12);
    for (const Circle& c : fit.candidates) {
      CHECK((c.center - p).norm() == doctest::Approx(r).epsilon(1e-9));
      CHECK(line_distance(w.s0, w.e0, c.center) ==
            doctest::Approx(r).epsilon(1e-9));
      CHECK(line_distance(w.s1, w.e1, c.center) ==
            doctest::Approx(r).epsilon(1e-9));
    }
  }
}

TEST_CASE("wedge + line: golden excircle construction") {
  const Vec2 a{0.909091, -2.09091}, b{0, -3}, c{0, -1.57143};
  const Wedge w = Wedge::from_arms(c, a, c, b);
  const FitResult fit = fit_wedge_line_excircle(w, a, b);
  REQUIRE(fit.candidates.size() == 4);
  const Vec2 expected[4] = {{1.09137, -3.45206},
                            {2.69118, -1.85226},
                            {-0.872999, -2.32956},
                            {0.726808, -0.729756}};
  for (int i = 0; i < 4; ++i) {
    CHECK(fit.candidates[i].center.x ==
          doctest::Approx(expected[i].x).epsilon(2e-5));
    CHECK(fit.candidates[i].center.y ==
          doctest::Approx(expected[i].y).epsilon(2e-5));
    CHECK(fit.candidates[i].radius == doctest::Approx(1.09137).epsilon(1e-5));
  }
  REQUIRE(fit.selected.has_value());
  CHECK(fit.selected->center.x == doctest::Approx(1.09137).epsilon(1e-5));
  CHECK(fit.selected->center.y == doctest::Approx(-3.45206).epsilon(1e-5));
  CHECK(fit.selection_residual <= 1e-9);
}

TEST_CASE("wedge + line: symmetric right isoceles") {
  const Wedge w = Wedge::from_arms({0, 0}, {2, 0}, {0, 0}, {0, 2});
  const FitResult fit = fit_wedge_line_excircle(w, {2, 0}, {0, 2});
  REQUIRE(fit.selected.has_value());
  const double expect = 2.0 + std::numbers::sqrt2;
  CHECK(fit.selected->center.x == doctest::Approx(expect).epsilon(1e-12));
  CHECK(fit.selected->center.y == doctest::Approx(expect).epsilon(1e-12));
  CHECK(fit.selected->radius == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("wedge + line: 3-4-5 triangle against the excenter formula") {
  const Vec2 a{3, 0}, b{0, 4}, c{0, 0};
  const Wedge w = Wedge::from_arms(c, a, c, b);
  const FitResult fit = fit_wedge_line_excircle(w, a, b);
  REQUIRE(fit.selected.has_value());
  const Circle oracle = test::excircle_opposite(a, b, c);
  CHECK(fit.selected->center.x ==
        doctest::Approx(oracle.center.x).epsilon(1e-9));
  CHECK(fit.selected->center.y ==
        doctest::Approx(oracle.center.y).epsilon(1e-9));
  CHECK(fit.selected->radius == doctest::Approx(oracle.radius).epsilon(1e-9));
  // Tangent to all three side lines.
  CHECK(line_distance(a, b, fit.selected->center) ==
        doctest::Approx(fit.selected->radius).epsilon(1e-9));
  CHECK(line_distance(c, a, fit.selected->center) ==
        doctest::Approx(fit.selected->radius).epsilon(1e-9));
  CHECK(line_distance(c, b, fit.selected->center) ==
        doctest::Approx(fit.selected->radius).epsilon(1e-9));
}

TEST_CASE("wedge + line: errors") {
  const Wedge w = Wedge::from_arms({0, 0}, {2, 0}, {0, 0}, {0, 2});
  // Parallel to the vertical arm.
  CHECK_THROWS_AS(fit_wedge_line_excircle(w, {1, 0}, {1, 1}), Error);
  // Crosses the arm lines behind the apex.
  CHECK_THROWS_WITH_AS(fit_wedge_line_excircle(w, {-1, 0}, {0, -1}),
                       "line does not cross both arms", Error);
  const Wedge strip = strip_x0_x2();
  CHECK_THROWS_AS(fit_wedge_line_excircle(strip, {0, 0}, {2, 2}), Error);
}

TEST_CASE("wedge + line: unique selection on random triangles") {
  Rng rng(22);
  const Tolerances tol;
  for (int i = 0; i < 2000; ++i) {
    const Vec2 apex = rng.point(-2, 2);
    const double alpha = rng.uniform(0, 2 * std::numbers::pi);
    const double open = rng.uniform(0.3, std::numbers::pi - 0.3);
    const Vec2 u0{std::cos(alpha), std::sin(alpha)};
    const Vec2 u1{std::cos(alpha + open), std::sin(alpha + open)};
    const Vec2 a = apex + u0 * rng.uniform(0.5, 3.0);
    const Vec2 b = apex + u1 * rng.uniform(0.5, 3.0);
    const Wedge w = Wedge::from_arms(apex, apex + u0, apex, apex + u1);
    const FitResult fit = fit_wedge_line_excircle(w, a, b, tol);
    REQUIRE(fit.selected.has_value());
    // Exactly one candidate is tangent to the second arm.
    int tangent_count = 0;
    for (const Circle& c : fit.candidates) {
      const double resid =
          std::abs(line_distance(apex, b, c.center) - c.radius);
      if (resid <= 1e-9 * std::max(1.0, c.radius)) ++tangent_count;
    }
    CHECK(tangent_count == 1);
    const Circle oracle = test::excircle_opposite(a, b, apex);
    CHECK((fit.selected->center - oracle.center).norm() <= 1e-8);
  }
}

TEST_CASE("wedge + point: golden incircle construction") {
  const Vec2 c{1, 2.5}, a{1.7, 1.8}, b{1, 1.6}, p{1.5, 1.6};
  const Wedge w = Wedge::from_arms(c, a, c, b);
  const FitResult fit = fit_wedge_point_incircle(w, p);
  REQUIRE(fit.candidates.size() == 2);
  CHECK(fit.candidates[0].center.x == doctest::Approx(1.28998).epsilon(1e-5));
  CHECK(fit.candidates[0].center.y == doctest::Approx(1.79994).epsilon(1e-5));
  CHECK(fit.candidates[0].radius == doctest::Approx(0.289975).epsilon(1e-5));
  CHECK(fit.candidates[1].center.x == doctest::Approx(1.62718).epsilon(1e-5));
  CHECK(fit.candidates[1].center.y == doctest::Approx(0.985848).epsilon(1e-5));
  CHECK(fit.candidates[1].radius == doctest::Approx(0.627182).epsilon(1e-5));
  REQUIRE(fit.selected.has_value());
  CHECK(fit.selected->radius == doctest::Approx(0.627182).epsilon(1e-5));
}

TEST_CASE("wedge + point: symmetric wedge, point on the bisector") {
  const Wedge w = Wedge::from_arms({0, 0}, {1, 1}, {0, 0}, {1, -1});
  const FitResult fit = fit_wedge_point_incircle(w, {1, 0});
  REQUIRE(fit.candidates.size() == 2);
  const double inv = 1.0 / std::numbers::sqrt2;
  CHECK(fit.candidates[0].center.x ==
        doctest::Approx(1.0 / (1.0 + inv)).epsilon(1e-12));
  CHECK(fit.candidates[1].center.x ==
        doctest::Approx(1.0 / (1.0 - inv)).epsilon(1e-12));
  CHECK(fit.selected->center.x ==
        doctest::Approx(3.41421356).epsilon(1e-7));
  CHECK(fit.selected->radius == doctest::Approx(2.41421356).epsilon(1e-7));
}

TEST_CASE("wedge + point: errors") {
  const Wedge w = Wedge::from_arms({0, 0}, {1, 1}, {0, 0}, {1, -1});
  CHECK_THROWS_WITH_AS(fit_wedge_point_incircle(w, {-1, 0}),
                       "point is not strictly inside the wedge", Error);
  CHECK_THROWS_AS(fit_wedge_point_incircle(strip_x0_x2(), {1, 0}), Error);
}

TEST_CASE("wedge + point: residuals on random instances") {
  Rng rng(23);
  for (int i = 0; i < 2000; ++i) {
    const Vec2 apex = rng.point(-2, 2);
    const double alpha = rng.uniform(0, 2 * std::numbers::pi);
    const double open = rng.uniform(0.3, std::numbers::pi - 0.3);
    const Vec2 u0{std::cos(alpha), std::sin(alpha)};
    const Vec2 u1{std::cos(alpha + open), std::sin(alpha + open)};
    const Vec2 p =
        apex + u0 * rng.uniform(0.1, 2.0) + u1 * rng.uniform(0.1, 2.0);
    const Wedge w = Wedge::from_arms(apex, apex + u0, apex, apex + u1);
    const FitResult fit = fit_wedge_point_incircle(w, p);
    REQUIRE(fit.candidates.size() == 2);
    for (const Circle& c : fit.candidates) {
      CHECK(std::abs(line_distance(apex, apex + u0, c.center) - c.radius) <=
            1e-9);
      CHECK(std::abs(line_distance(apex, apex + u1, c.center) - c.radius) <=
            1e-9);
      CHECK(std::abs((c.center - p).norm() - c.radius) <= 1e-9);
    }
    CHECK(fit.selected->radius >=
          std::min(fit.candidates[0].radius, fit.candidates[1].radius));
  }
}

TEST_CASE("fitters are equivariant under rigid motions") {
  Rng rng(24);
  for (int i = 0; i < 500; ++i) {
    const double ang = rng.uniform(0, 2 * std::numbers::pi);
    const Vec2 shift = rng.point(-10, 10);
    auto xf = [&](Vec2 v) { return test::rotated(v, ang) + shift; };

    // strip + line
    {
      const Wedge w = Wedge::from_arms({0, 2}, {0, 7}, {4, 4}, {4, 10});
      const Vec2 a{0, 16.0 / 3.0}, b{4, 8};
      const FitResult base = fit_degenerate_wedge_line(w, a, b);
      const Wedge wx = Wedge::from_arms(xf(w.s0), xf(w.e0), xf(w.s1), xf(w.e1));
      const FitResult moved = fit_degenerate_wedge_line(wx, xf(a), xf(b));
      for (std::size_t k = 0; k < base.candidates.size(); ++k) {
        const Vec2 want = xf(base.candidates[k].center);
        CHECK((moved.candidates[k].center - want).norm() <= 1e-9);
        CHECK(moved.candidates[k].radius ==
              doctest::Approx(base.candidates[k].radius).epsilon(1e-9));
      }
    }

    // wedge + point
    {
      const Vec2 c{1, 2.5}, a{1.7, 1.8}, b{1, 1.6}, p{1.5, 1.6};
      const Wedge w = Wedge::from_arms(c, a, c, b);
      const FitResult base = fit_wedge_point_incircle(w, p);
      const Wedge wx = Wedge::from_arms(xf(c), xf(a), xf(c), xf(b));
      const FitResult moved = fit_wedge_point_incircle(wx, xf(p));
      for (std::size_t k = 0; k < base.candidates.size(); ++k) {
        const Vec2 want = xf(base.candidates[k].center);
        CHECK((moved.candidates[k].center - want).norm() <= 1e-9);
      }
    }
  }
}
