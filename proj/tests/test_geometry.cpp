#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>
#include <sstream>

#include "rectmatch/geometry.hpp"
#include "rectmatch/io.hpp"
#include "test_helpers.hpp"

using namespace rectmatch;

TEST_CASE("grid-x single point sits at x = 1") {
  const auto inst = generate_instance(1, 77, Model::GridX);
  CHECK(inst.n() == 1);
  CHECK(inst.point(0).x == 1.0);
}

TEST_CASE("generation is deterministic given (n, seed, model)") {
  const auto a = generate_instance(5, 42, Model::UniformSquare);
  const auto b = generate_instance(5, 42, Model::UniformSquare);
  REQUIRE(a.n() == b.n());
  for (int i = 0; i < a.n(); ++i) {
    CHECK(a.point(i).x == b.point(i).x);
    CHECK(a.point(i).y == b.point(i).y);
    CHECK(a.point(i).color == b.point(i).color);
  }
}

TEST_CASE("red count follows the fair-coin binomial") {
  const auto inst = generate_instance(10000, 7, Model::UniformSquare);
  int reds = 0;
  for (const auto& p : inst.points()) reds += p.color == Color::Red;
  const double sigma = std::sqrt(10000 * 0.25);
  CHECK(std::abs(reds - 5000.0) <= 4.0 * sigma);
}

TEST_CASE("generated instances are sorted and in general position") {
  for (std::uint64_t seed : {1ULL, 2ULL, 99ULL}) {
    for (Model model : {Model::UniformSquare, Model::GridX}) {
      const auto inst = generate_instance(50, seed, model);
      std::set<double> xs, ys;
      for (int i = 0; i < inst.n(); ++i) {
        if (i > 0) CHECK(inst.point(i - 1).x < inst.point(i).x);
        CHECK(xs.insert(inst.point(i).x).second);
        CHECK(ys.insert(inst.point(i).y).second);
      }
      if (model == Model::GridX) {
        for (int i = 0; i < inst.n(); ++i) {
          CHECK(inst.point(i).x == static_cast<double>(i + 1) / 50.0);
        }
      }
    }
  }
}

TEST_CASE("bbox") {
  const ColoredPoint p{0.1, 0.2, Color::Red}, q{0.5, 0.8, Color::Red};
  const Rect r = bbox(p, q);
  CHECK(r.xmin == 0.1);
  CHECK(r.xmax == 0.5);
  CHECK(r.ymin == 0.2);
  CHECK(r.ymax == 0.8);

  const ColoredPoint same{0.3, 0.3, Color::Blue};
  const Rect deg = bbox(same, same);
  CHECK(deg.xmin == deg.xmax);
  CHECK(deg.ymin == deg.ymax);

  const ColoredPoint a{0.2, 0.9, Color::Red}, b{0.4, 0.1, Color::Red};
  const Rect cross = bbox(a, b);
  CHECK(cross.xmin == 0.2);
  CHECK(cross.xmax == 0.4);
  CHECK(cross.ymin == 0.1);
  CHECK(cross.ymax == 0.9);
}

TEST_CASE("closed-rectangle disjointness") {
  const Rect a{0, 0.1, 0, 0.1}, b{0.2, 0.3, 0.2, 0.3};
  CHECK(rects_disjoint(a, b));
  CHECK(rects_disjoint(b, a));
  const Rect c{0, 0.2, 0, 0.2}, d{0.2, 0.3, 0.2, 0.3};
  CHECK_FALSE(rects_disjoint(c, d));  // shared boundary point
  CHECK_FALSE(rects_disjoint(c, c));
}

TEST_CASE("points_in_rect") {
  const auto inst = testutil::make_instance(
      {{0.1, 0.1, 'R'}, {0.5, 0.5, 'B'}, {0.9, 0.9, 'R'}});
  CHECK(points_in_rect(inst, Rect{0.95, 0.99, 0.0, 0.05}).empty());
  const auto all = points_in_rect(inst, bbox(inst.point(0), inst.point(2)));
  CHECK(all == std::vector<int>{0, 1, 2});
  const auto two = testutil::make_instance({{0.1, 0.9, 'R'}, {0.8, 0.2, 'R'}});
  CHECK(points_in_rect(two, bbox(two.point(0), two.point(1))) ==
        std::vector<int>{0, 1});
}

TEST_CASE("validate_matching") {
  SUBCASE("same-color pair is valid") {
    const auto inst = testutil::make_instance({{0.1, 0.1, 'R'}, {0.5, 0.5, 'R'}});
    Matching m;
    m.add(0, 1);
    CHECK(validate_matching(inst, m).valid);
  }
  SUBCASE("different colors rejected") {
    const auto inst = testutil::make_instance({{0.1, 0.1, 'R'}, {0.5, 0.5, 'B'}});
    Matching m;
    m.add(0, 1);
    const auto r = validate_matching(inst, m);
    CHECK_FALSE(r.valid);
    CHECK(r.violation == "pair colors differ");
  }
  SUBCASE("covered third point rejected") {
    const auto inst = testutil::make_instance(
        {{0.1, 0.1, 'R'}, {0.5, 0.5, 'B'}, {0.9, 0.9, 'R'}});
    Matching m;
    m.add(0, 2);
    const auto r = validate_matching(inst, m);
    CHECK_FALSE(r.valid);
    CHECK(r.violation == "bounding box covers a third point");
  }
  SUBCASE("empty matching is always feasible") {
    const auto inst = generate_instance(20, 3, Model::UniformSquare);
    CHECK(validate_matching(inst, Matching{}).valid);
  }
  SUBCASE("out-of-range index throws") {
    const auto inst = testutil::make_instance({{0.1, 0.1, 'R'}, {0.5, 0.5, 'R'}});
    Matching m;
    m.add(0, 5);
    CHECK_THROWS_AS(validate_matching(inst, m), IndexOutOfRange);
  }
}

TEST_CASE("perturb_y and flip_color") {
  const auto inst = generate_instance(6, 11, Model::UniformSquare);
  SUBCASE("double flip is the identity") {
    const auto twice = flip_color(flip_color(inst, 2), 2);
    CHECK(twice.point(2).color == inst.point(2).color);
  }
  SUBCASE("perturbing to the current y changes nothing") {
    const auto same = perturb_y(inst, 3, inst.point(3).y);
    CHECK(same.point(3).y == inst.point(3).y);
  }
  SUBCASE("perturbed instance stays in general position") {
    const auto moved = perturb_y(inst, 0, 0.123456);
    std::set<double> ys;
    for (const auto& p : moved.points()) CHECK(ys.insert(p.y).second);
  }
  SUBCASE("y collision rejected") {
    CHECK_THROWS_AS(perturb_y(inst, 0, inst.point(1).y), GeneralPositionViolation);
  }
}

TEST_CASE("monotone maps preserve order") {
  const auto inst = generate_instance(30, 5, Model::UniformSquare);
  for (MonotoneMap map : {MonotoneMap::Cube, MonotoneMap::Sqrt, MonotoneMap::AffineUp}) {
    const auto mapped = apply_monotone_map(inst, map);
    for (int i = 1; i < inst.n(); ++i) {
      CHECK(mapped.point(i - 1).x < mapped.point(i).x);
      CHECK((inst.point(i - 1).y < inst.point(i).y) ==
            (mapped.point(i - 1).y < mapped.point(i).y));
    }
    for (const auto& p : mapped.points()) {
      CHECK(p.x >= 0.0);
      CHECK(p.x <= 1.0);
    }
  }
  const auto cubed = apply_monotone_map(
      testutil::make_instance({{0.2, 0.2, 'R'}, {0.5, 0.5, 'B'}}), MonotoneMap::Cube);
  CHECK(cubed.point(0).x == doctest::Approx(0.008).epsilon(1e-12));
  CHECK(cubed.point(1).x == doctest::Approx(0.125).epsilon(1e-12));
}

TEST_CASE("instance CSV round trip") {
  const auto inst = generate_instance(25, 123, Model::UniformSquare);
  std::stringstream buf;
  write_instance_csv(inst, buf);
  const auto back = read_instance_csv(buf);
  REQUIRE(back.n() == inst.n());
  for (int i = 0; i < inst.n(); ++i) {
    CHECK(back.point(i).x == inst.point(i).x);
    CHECK(back.point(i).y == inst.point(i).y);
    CHECK(back.point(i).color == inst.point(i).color);
  }
}

TEST_CASE("malformed CSV reports the offending line") {
  std::stringstream bad("x,y,color\n0.1,0.2,R\n0.3,oops,B\n");
  try {
    read_instance_csv(bad);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
  }
  std::stringstream badheader("a,b\n");
  CHECK_THROWS_AS(read_instance_csv(badheader), ParseError);
  std::stringstream unsorted("x,y,color\n0.5,0.2,R\n0.3,0.4,B\n");
  CHECK_THROWS_AS(read_instance_csv(unsorted), ParseError);
}
