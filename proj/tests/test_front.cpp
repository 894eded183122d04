#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "firefront/error.hpp"
#include "firefront/front.hpp"
#include "firefront/speed.hpp"
#include "oracles.hpp"

using namespace firefront;
using std::numbers::pi;

TEST_CASE("signed distance of a circle") {
  const Grid g = Grid::square(0.0, 3.0, 301);
  const LevelSetField f = signed_distance(InitialShape::circle({1.5, 1.5}, 0.5), g);
  CHECK(f.at(150, 150) == doctest::Approx(-0.5));
  CHECK(std::abs(f.at(200, 150)) < 1e-12);
  CHECK(f.at(250, 150) == doctest::Approx(0.5));
}

TEST_CASE("shape validation") {
  const Grid g = Grid::square(0.0, 3.0, 31);
  CHECK_THROWS_AS(InitialShape::circle({2.8, 1.5}, 0.5).validate(g), InputError);
  CHECK_THROWS_AS(InitialShape::circle({1.5, 1.5}, 0.0).validate(g), InputError);
  InitialShape bow;
  bow.polygons.push_back({{{1, 1}, {2, 2}, {2, 1}, {1, 2}}});
  CHECK_THROWS_AS(bow.validate(g), InputError);
  CHECK_THROWS_AS(InitialShape{}.validate(g), InputError);
}

TEST_CASE("union of circles and islands") {
  InitialShape s;
  s.circles = {{{1.0, 1.0}, 0.3}, {{1.9, 1.2}, 0.3}};
  s.islands.push_back(InitialShape::square({1.9, 1.2}, 0.2));
  CHECK(shape_signed_distance(s, {1.0, 1.0}) == doctest::Approx(-0.3));
  CHECK(shape_signed_distance(s, {1.9, 1.2}) == doctest::Approx(0.1));
  CHECK(shape_signed_distance(s, {1.9, 1.35}) == doctest::Approx(-0.05));
  CHECK(shape_signed_distance(s, {1.45, 1.0}) == doctest::Approx(0.15));
}

TEST_CASE("extracted circle lies within dx of the true circle") {
  const double dx = 0.003;
  const Grid g = Grid::square(0.0, 3.0, 1001);
  const Vec2 c{1.5, 1.5};
  const LevelSetField f = signed_distance(InitialShape::circle(c, 0.5), g);
  const Front front = extract_front(f);
  REQUIRE(front.curves.size() == 1);
  double mean = 0.0;
  for (const auto& v : front.curves[0].vertices) {
    const double e = std::abs(distance(v.position, c) - 0.5);
    CHECK(e < dx);
    mean += e;
    // Normals point outward.
    CHECK(dot(v.normal, v.position - c) > 0.0);
  }
  mean /= static_cast<double>(front.vertex_count());
  CHECK(mean < dx);
  CHECK(signed_area(front.curves[0]) > 0.0);
  CHECK(burned_area(front) == doctest::Approx(pi * 0.25).epsilon(1e-3));
}

TEST_CASE("topology of extracted fronts") {
  const Grid g = Grid::square(0.0, 3.0, 151);
  CHECK(extract_front(LevelSetField(g, 1.0)).empty());

  InitialShape two;
  two.circles = {{{0.8, 1.5}, 0.4}, {{2.2, 1.5}, 0.4}};
  CHECK(extract_front(signed_distance(two, g)).curves.size() == 2);

  InitialShape island;
  island.circles = {{{1.5, 1.5}, 0.8}};
  island.islands.push_back(InitialShape::square({1.5, 1.5}, 0.4));
  const Front f = extract_front(signed_distance(island, g));
  REQUIRE(f.curves.size() == 2);
  int ccw = 0, cw = 0;
  for (const auto& c : f.curves) (signed_area(c) > 0 ? ccw : cw)++;
  CHECK(ccw == 1);
  CHECK(cw == 1);
  CHECK(burned_area(f) == doctest::Approx(pi * 0.64 - 0.16).epsilon(5e-3));
}

TEST_CASE("signs alternate across nested curves") {
  const Grid g = Grid::square(0.0, 3.0, 151);
  InitialShape s;
  s.circles = {{{1.5, 1.5}, 1.0}};
  s.islands.push_back(InitialShape::square({1.5, 1.5}, 1.0));
  const LevelSetField f = signed_distance(s, g);
  // Ray along y = 1.5 from the left boundary to the center: + - +
  int changes = 0;
  for (int i = 1; i <= 75; ++i)
    if ((f.at(i, 75) < 0) != (f.at(i - 1, 75) < 0)) ++changes;
  CHECK(f.at(0, 75) > 0);
  CHECK(f.at(75, 75) > 0);
  CHECK(changes == 2);
}

TEST_CASE("zero-valued nodes do not split curves") {
  // Radius 0.5 on a 0.01 grid puts four nodes exactly on the circle.
  const Grid g = Grid::square(0.0, 3.0, 301);
  const LevelSetField f = signed_distance(InitialShape::circle({1.5, 1.5}, 0.5), g);
  const Front front = extract_front(f);
  CHECK(front.curves.size() == 1);
  CHECK(burned_area(front) == doctest::Approx(pi * 0.25).epsilon(1e-3));

  // Square with edges on grid lines.
  LevelSetField box(Grid::square(0.0, 1.0, 11), 1.0);
  for (int j = 3; j <= 7; ++j)
    for (int i = 3; i <= 7; ++i) box[box.grid().index(i, j)] = (i == 3 || i == 7 || j == 3 || j == 7) ? 0.0 : -1.0;
  const Front sq = extract_front(box);
  CHECK(sq.curves.size() == 1);
}

TEST_CASE("saddle cells follow the center average") {
  // Two diagonal negative nodes around one interior saddle cell.
  auto diagonal = [](double depth) {
    LevelSetField f(Grid::square(0.0, 3.0, 4), 1.0);
    f[f.grid().index(1, 1)] = -depth;
    f[f.grid().index(2, 2)] = -depth;
    return extract_front(f);
  };
  CHECK(diagonal(2.0).curves.size() == 1);
  CHECK(diagonal(0.5).curves.size() == 2);
}

TEST_CASE("reinitialize restores a signed distance") {
  const Grid g = Grid::square(0.0, 3.0, 151);
  const Vec2 c{1.4, 1.55};
  LevelSetField f = signed_distance(InitialShape::circle(c, 0.6), g);
  for (std::size_t k = 0; k < g.size(); ++k) f[k] *= 2.0;
  const Front front = extract_front(f);
  const NarrowBand band = rebuild_band(f, front, BandWidths{});
  LevelSetField before = f;
  reinitialize(f, front, band);
  for (std::size_t k : band.active()) {
    const double exact = distance(g.point(k), c) - 0.6;
    CHECK(std::abs(f[k] - exact) <= g.dx());
    CHECK(std::abs(std::abs(f[k]) - oracle::front_distance(front, g.point(k))) <= 1e-12);
    if (std::abs(before[k]) > 2.0 * g.h()) CHECK((f[k] < 0) == (before[k] < 0));
  }
  CHECK_THROWS_AS(reinitialize(f, Front{}, band), ContractViolation);
}

TEST_CASE("velocity extension") {
  const Grid g = Grid::square(0.0, 3.0, 151);
  const LevelSetField f = signed_distance(InitialShape::circle({1.5, 1.5}, 0.5), g);
  Front front = extract_front(f);
  const NarrowBand band = rebuild_band(f, front, BandWidths{});
  for (auto& c : front.curves)
    for (auto& v : c.vertices) v.speed = 1.0;
  VelocityExtension ext = extend_velocity(front, band, g);
  REQUIRE(ext.speed.size() == band.size());
  for (double s : ext.speed) CHECK(s == 1.0);

  SpeedConfig fire;
  fire.kind = SpeedModelKind::kSimplified;
  sample_front_speeds(front, 0.0, fire);
  ext = extend_velocity(front, band, g);
  const auto active = band.active();
  for (std::size_t n = 0; n < active.size(); ++n) {
    if (active[n] == g.index(105, 75)) CHECK(ext.speed[n] == doctest::Approx(5.2).epsilon(1e-3));
    if (active[n] == g.index(45, 75)) CHECK(ext.speed[n] == doctest::Approx(0.1).epsilon(1e-2));
  }
  CHECK_THROWS_AS(extend_velocity(Front{}, band, g), ContractViolation);
}

TEST_CASE("snapshot round trip") {
  const Grid g = Grid::square(0.0, 3.0, 101);
  InitialShape s;
  s.circles = {{{0.8, 1.5}, 0.4}, {{2.2, 1.5}, 0.4}};
  const Front front = extract_front(signed_distance(s, g));
  std::stringstream out;
  write_front(out, front, 0.125);
  std::string header;
  std::getline(out, header);
  CHECK(header == "t=0.125 curves=2");
  out.seekg(0);
  const FrontSnapshot back = read_front(out);
  CHECK(back.t == 0.125);
  REQUIRE(back.front.curves.size() == 2);
  for (std::size_t c = 0; c < 2; ++c) {
    REQUIRE(back.front.curves[c].vertices.size() == front.curves[c].vertices.size());
    for (std::size_t v = 0; v < front.curves[c].vertices.size(); ++v) {
      CHECK(back.front.curves[c].vertices[v].position.x ==
            doctest::Approx(front.curves[c].vertices[v].position.x).epsilon(1e-8));
      CHECK(back.front.curves[c].vertices[v].position.y ==
            doctest::Approx(front.curves[c].vertices[v].position.y).epsilon(1e-8));
    }
  }
}
