#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "oracle.hpp"
#include "polygon_io.hpp"
#include "support.hpp"

using namespace trienc;

TEST_CASE("parse json") {
  const auto doc = parse_polygon("[[0,0],[1,0],[1,1],[0,1]]",
                                 PolygonFormat::json);
  REQUIRE(doc.vertices.size() == 4);
  CHECK(doc.vertices[2] == Vec2{1, 1});
}

TEST_CASE("parse csv") {
  const auto doc = parse_polygon("# unit square\n0,0\n1,0\n\n1,1\n0,1\n",
                                 PolygonFormat::csv);
  REQUIRE(doc.vertices.size() == 4);
  CHECK(doc.vertices[3] == Vec2{0, 1});

  const auto sci = parse_polygon("1e-2, 0\n2.5E1, 0\n0, 3.25e+1\n",
                                 PolygonFormat::csv);
  CHECK(sci.vertices[0].x == doctest::Approx(0.01));
  CHECK(sci.vertices[1].x == doctest::Approx(25.0));
  CHECK(sci.vertices[2].y == doctest::Approx(32.5));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_polygon("[[0,0],[1,0]]", PolygonFormat::json), Error);
  CHECK_THROWS_AS(parse_polygon("[[0,0],[1]]", PolygonFormat::json), Error);
  CHECK_THROWS_AS(parse_polygon("not json", PolygonFormat::json), Error);
  CHECK_THROWS_AS(parse_polygon("0,0\n1;0\n2,2\n", PolygonFormat::csv), Error);
  CHECK_THROWS_AS(parse_polygon("0,0\n1,0,9\n2,2\n", PolygonFormat::csv),
                  Error);
  try {
    parse_polygon("0,0\n1,zzz\n2,2\n", PolygonFormat::csv);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::parse_error);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("validation fixes orientation") {
  PolygonDocument doc;
  doc.vertices = {{0, 0}, {0, 1}, {1, 1}, {1, 0}};  // clockwise
  const auto vr = validate_normalize(doc);
  CHECK(vr.reversed);
  CHECK(vr.polygon.size() == 4);
  CHECK(vr.merged_vertices == 0);
}

TEST_CASE("validation merges colinear neighbours") {
  PolygonDocument doc;
  doc.vertices = {{0, 0}, {0.5, 0}, {1, 0}, {1, 1}, {0, 1}};
  const auto vr = validate_normalize(doc);
  CHECK(vr.merged_vertices == 1);
  CHECK(vr.polygon.size() == 4);
}

TEST_CASE("validation rejections") {
  PolygonDocument bowtie;
  bowtie.vertices = {{0, 0}, {1, 1}, {1, 0}, {0, 1}};
  CHECK_THROWS_AS(validate_normalize(bowtie), Error);
  try {
    validate_normalize(bowtie);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::non_convex);
    CHECK(std::string(e.code_name()) == "NonConvex");
  }

  PolygonDocument dup;
  dup.vertices = {{0, 0}, {0, 0}, {1, 0}, {0, 1}};
  CHECK_THROWS_AS(validate_normalize(dup), Error);

  PolygonDocument flat;
  flat.vertices = {{0, 0}, {1, 0}, {2, 0}};
  CHECK_THROWS_AS(validate_normalize(flat), Error);

  PolygonDocument dent;
  dent.vertices = {{0, 0}, {2, 0}, {2, 2}, {1, 0.5}, {0, 2}};
  CHECK_THROWS_AS(validate_normalize(dent), Error);
}

TEST_CASE("validation is idempotent") {
  PolygonDocument doc;
  doc.vertices = {{0, 0}, {0.5, 0}, {1, 0}, {1, 1}, {0, 1}};
  const auto once = validate_normalize(doc);
  PolygonDocument again;
  again.vertices = once.polygon.vertices();
  const auto twice = validate_normalize(again);
  CHECK(twice.merged_vertices == 0);
  CHECK_FALSE(twice.reversed);
  REQUIRE(twice.polygon.size() == once.polygon.size());
  for (std::size_t i = 0; i < once.polygon.size(); ++i) {
    CHECK(twice.polygon.vertex(i) == once.polygon.vertex(i));
  }
}

TEST_CASE("serialize/parse round-trip") {
  test::Rng rng(31);
  for (int iter = 0; iter < 20; ++iter) {
    const ConvexPolygon poly = random_convex_polygon(3 + rng.index(20),
                                                     900 + iter);
    for (const auto fmt : {PolygonFormat::json, PolygonFormat::csv}) {
      const std::string data = serialize_polygon(poly.vertices(), fmt);
      const auto doc = parse_polygon(data, fmt);
      REQUIRE(doc.vertices.size() == poly.size());
      for (std::size_t i = 0; i < poly.size(); ++i) {
        CHECK(doc.vertices[i].x ==
              doctest::Approx(poly.vertex(i).x).epsilon(1e-15));
        CHECK(doc.vertices[i].y ==
              doctest::Approx(poly.vertex(i).y).epsilon(1e-15));
      }
    }
  }
}

TEST_CASE("corpus polygons validate") {
  for (int i = 0; i < 50; ++i) {
    const ConvexPolygon poly =
        random_convex_polygon(3 + (i % 48), 4242 + i);
    PolygonDocument doc;
    doc.vertices = poly.vertices();
    const auto vr = validate_normalize(doc);
    CHECK(vr.polygon.size() == poly.size());
    CHECK_FALSE(vr.reversed);
  }
}

TEST_CASE("svg: polygon alone renders one path") {
  const ConvexPolygon sq = test::unit_square();
  Scene scene;
  scene.polygon = &sq;
  const std::string svg = render_svg(scene);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("viewBox=") != std::string::npos);
  std::size_t paths = 0, pos = 0;
  while ((pos = svg.find("<path", pos)) != std::string::npos) {
    ++paths;
    pos += 5;
  }
  CHECK(paths == 1);
  CHECK(svg.find("<circle") == std::string::npos);
}

TEST_CASE("svg: excircle scene renders four circles") {
  const Vec2 a{0.909091, -2.09091}, b{0, -3}, c{0, -1.57143};
  const ConvexPolygon tri = ConvexPolygon::from_vertices({a, c, b});
  Scene scene;
  scene.polygon = &tri;
  scene.triangle = Triangle{a, b, c};
  scene.circles = {{{1.09137, -3.45206}, 1.09137},
                   {{2.69118, -1.85226}, 1.09137},
                   {{-0.872999, -2.32956}, 1.09137},
                   {{0.726808, -0.729756}, 1.09137}};
  const std::string svg = render_svg(scene);
  std::size_t circles = 0, pos = 0;
  while ((pos = svg.find("<circle", pos)) != std::string::npos) {
    ++circles;
    pos += 7;
  }
  CHECK(circles == 4);
}

TEST_CASE("svg output is deterministic") {
  const ConvexPolygon sq = test::unit_square();
  Scene scene;
  scene.polygon = &sq;
  scene.triangle = Triangle{{-1, 0}, {2, 0}, {0.5, 2.5}};
  CHECK(render_svg(scene) == render_svg(scene));
}
