#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracle.hpp"
#include "support.hpp"

using namespace trienc;
using trienc::test::Rng;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("triangle_from_angles rejects bad configurations") {
  const ConvexPolygon sq = test::unit_square();
  // Two parallel supporting lines (gap of pi).
  CHECK_THROWS_AS(triangle_from_angles(sq, 0.0, kPi, kPi / 2), Error);
  // Duplicate normals.
  CHECK_THROWS_AS(triangle_from_angles(sq, 0.3, 0.3, 2.0), Error);
  // Gap larger than pi: normals do not positively span.
  CHECK_THROWS_AS(triangle_from_angles(sq, 0.0, 0.5, 1.2), Error);
}

TEST_CASE("triangle_from_angles recovers a triangle polygon") {
  const ConvexPolygon tri =
      ConvexPolygon::from_vertices({{0, 0}, {4, 0}, {0, 3}});
  // The polygon's own outward edge normals.
  const double t1 = -kPi / 2;           // edge (0,0)->(4,0)
  const double t2 = std::atan2(4, 3);   // edge (4,0)->(0,3)
  const double t3 = kPi;                // edge (0,3)->(0,0)
  const Triangle t = triangle_from_angles(tri, t1, t2, t3);
  CHECK(t.perimeter() == doctest::Approx(12.0).epsilon(1e-9));
}

TEST_CASE("triangle_from_angles containment on random valid triples") {
  Rng rng(41);
  const ConvexPolygon poly = random_convex_polygon(17, 777);
  int tested = 0;
  while (tested < 1000) {
    const double t1 = rng.uniform(0, 2 * kPi);
    const double g1 = rng.uniform(0.05, kPi - 0.05);
    double g2 = rng.uniform(0.05, kPi - 0.05);
    if (g1 + g2 <= kPi + 0.05) continue;  // third gap must stay below pi
    const Triangle t = triangle_from_angles(poly, t1, t1 + g1, t1 + g1 + g2);
    for (const Vec2& v : poly.vertices()) {
      CHECK(t.contains(v, 1e-9));
    }
    ++tested;
  }
}

TEST_CASE("oracle returns the triangle itself for triangle input") {
  const ConvexPolygon tri =
      ConvexPolygon::from_vertices({{0, 0}, {4, 0}, {0, 3}});
  OracleOptions opts;
  opts.coarse_steps = 180;
  const OracleResult res = oracle_min_perimeter(tri, opts);
  CHECK(res.perimeter == doctest::Approx(12.0).epsilon(1e-9));
  CHECK(res.refined);
  CHECK(res.grid_resolution == 180);
}

TEST_CASE("oracle on the unit square") {
  const ConvexPolygon sq = test::unit_square();
  OracleOptions opts;
  opts.coarse_steps = 240;
  const OracleResult res = oracle_min_perimeter(sq, opts);
  // Frozen after the first verified run: the flush-edge sweep, the
  // full-grid sweep and the solver all agree on this value to 2e-12.
  CHECK(res.perimeter == doctest::Approx(6.457409902189).epsilon(1e-6));
  for (const Vec2& v : sq.vertices()) {
    CHECK(res.triangle.contains(v, 1e-9));
  }
}

TEST_CASE("oracle is invariant under rotating a hexagon by 60 degrees") {
  OracleOptions opts;
  opts.coarse_steps = 180;
  const OracleResult a = oracle_min_perimeter(test::regular_ngon(6), opts);
  const OracleResult b =
      oracle_min_perimeter(test::regular_ngon(6, 1.0, kPi / 3), opts);
  CHECK(a.perimeter == doctest::Approx(b.perimeter).epsilon(1e-6));
}

TEST_CASE("oracle refinement does not lose to the coarse grid") {
  for (int iter = 0; iter < 5; ++iter) {
    const ConvexPolygon poly = random_convex_polygon(9 + iter, 600 + iter);
    OracleOptions fine;
    fine.coarse_steps = 96;
    OracleOptions coarse;
    coarse.coarse_steps = 24;
    const double refined = oracle_min_perimeter(poly, coarse).perimeter;
    const double denser = oracle_min_perimeter(poly, fine).perimeter;
    // The refined coarse run must compete with a much denser grid.
    CHECK(refined <= denser * (1.0 + 1e-6));
  }
}

TEST_CASE("full-grid mode agrees with the flush-edge sweep") {
  const ConvexPolygon poly = random_convex_polygon(9, 321);
  OracleOptions flush;
  flush.coarse_steps = 64;
  OracleOptions full;
  full.coarse_steps = 64;
  full.full_grid = true;
  const double a = oracle_min_perimeter(poly, flush).perimeter;
  const double b = oracle_min_perimeter(poly, full).perimeter;
  CHECK(a == doctest::Approx(b).epsilon(1e-4));
}

TEST_CASE("random polygon generation") {
  const ConvexPolygon tri = random_convex_polygon(3, 1);
  CHECK(tri.size() == 3);

  const ConvexPolygon a = random_convex_polygon(25, 42);
  const ConvexPolygon b = random_convex_polygon(25, 42);
  REQUIRE(a.size() == 25);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a.vertex(i) == b.vertex(i));  // bit-identical across runs
  }

  const ConvexPolygon big = random_convex_polygon(200, 7);
  REQUIRE(big.size() == 200);
  const Tolerances tol;
  for (std::size_t i = 0; i < big.size(); ++i) {
    const std::size_t n = big.size();
    const Vec2 e_in = big.vertex(i) - big.vertex((i + n - 1) % n);
    const Vec2 e_out = big.vertex((i + 1) % n) - big.vertex(i);
    CHECK(e_in.cross(e_out) > tol.cross);
  }

  CHECK_THROWS_AS(random_convex_polygon(2, 5), Error);
  CHECK_THROWS_AS(random_convex_polygon(100000, 5), Error);
}

TEST_CASE("generated polygons differ across seeds") {
  const ConvexPolygon a = random_convex_polygon(12, 1);
  const ConvexPolygon b = random_convex_polygon(12, 2);
  bool any_diff = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a.vertex(i) == b.vertex(i))) any_diff = true;
  }
  CHECK(any_diff);
}
