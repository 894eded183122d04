#include <doctest.h>

#include <cmath>
#include <sstream>

#include "firefront/error.hpp"
#include "firefront/front.hpp"
#include "firefront/grid.hpp"
#include "oracles.hpp"

using namespace firefront;

namespace {

LevelSetField sample(const Grid& g, auto&& fn) {
  LevelSetField f(g);
  for (int j = 0; j < g.ny(); ++j)
    for (int i = 0; i < g.nx(); ++i) f[g.index(i, j)] = fn(g.x(i), g.y(j));
  return f;
}

}  // namespace

TEST_CASE("node coordinates round-trip") {
  const Grid g = Grid::square(0.0, 3.0, 301);
  CHECK(g.dx() == doctest::Approx(0.01));
  for (int i : {0, 1, 150, 299, 300}) {
    CHECK(g.nearest_col(g.x(i)) == i);
    CHECK(g.nearest_row(g.y(i)) == i);
  }
  CHECK(g.index(3, 2) == 2u * 301u + 3u);
  CHECK(g.col(g.index(7, 9)) == 7);
  CHECK(g.row(g.index(7, 9)) == 9);
  CHECK_THROWS_AS(Grid({0, 0}, 0.0, 1.0, 3, 3), InputError);
  CHECK_THROWS_AS(Grid({0, 0}, 1.0, 1.0, 1, 3), InputError);
}

TEST_CASE("diff_ops on linear and constant fields") {
  const Grid g({0.0, 0.0}, 1.0, 1.0, 5, 5);
  const LevelSetField lin = sample(g, [](double x, double) { return x; });
  const OneSidedDiffs d = diff_ops(lin, g.index(2, 2));
  CHECK(d.plus_x == 1.0);
  CHECK(d.minus_x == 1.0);
  CHECK(d.plus_y == 0.0);
  CHECK(d.minus_y == 0.0);

  const LevelSetField flat(g, 3.5);
  const OneSidedDiffs z = diff_ops(flat, g.index(1, 3));
  CHECK(z.plus_x == 0.0);
  CHECK(z.minus_x == 0.0);
  CHECK(z.plus_y == 0.0);
  CHECK(z.minus_y == 0.0);
}

TEST_CASE("diff_ops is exact on affine fields, boundary included") {
  const Grid g({-1.0, 0.5}, 0.25, 0.125, 9, 7);
  const LevelSetField f = sample(g, [](double x, double y) { return 0.75 * x - 2.5 * y + 0.3; });
  for (std::size_t k = 0; k < g.size(); ++k) {
    const OneSidedDiffs d = diff_ops(f, k);
    CHECK(d.plus_x == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(d.minus_x == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(d.plus_y == doctest::Approx(-2.5).epsilon(1e-12));
    CHECK(d.minus_y == doctest::Approx(-2.5).epsilon(1e-12));
  }
}

TEST_CASE("diff_ops of x^2 at x = 1") {
  const Grid g({0.0, 0.0}, 0.1, 0.1, 21, 3);
  const LevelSetField f = sample(g, [](double x, double) { return x * x; });
  const OneSidedDiffs d = diff_ops(f, g.index(10, 1));
  CHECK(d.plus_x == doctest::Approx(2.1).epsilon(1e-12));
  CHECK(d.minus_x == doctest::Approx(1.9).epsilon(1e-12));
}

TEST_CASE("diff_ops rejects neighbors outside the band when asked") {
  const Grid g({0.0, 0.0}, 1.0, 1.0, 5, 5);
  const LevelSetField f(g, 1.0);
  NarrowBand band(g, BandWidths{});
  band.add(g.index(2, 2), true);
  band.add(g.index(3, 2), true);
  band.finalize();
  CHECK_THROWS_AS(diff_ops(f, g.index(2, 2), &band, StencilPolicy::kRequireActive), ContractViolation);
  CHECK_NOTHROW(diff_ops(f, g.index(2, 2), &band, StencilPolicy::kUseStored));
}

TEST_CASE("normal_at") {
  const Grid g = Grid::square(0.0, 3.0, 301);
  const Vec2 c{1.5, 1.5};
  const LevelSetField circle = sample(g, [&](double x, double y) { return distance({x, y}, c) - 0.5; });
  const auto n = normal_at(circle, g.index(200, 150));
  REQUIRE(n);
  CHECK(n->x == doctest::Approx(1.0).epsilon(1e-4));
  CHECK(std::abs(n->y) < 1e-4);

  const LevelSetField line = sample(g, [](double, double y) { return y - 1.0; });
  const auto up = normal_at(line, g.index(10, 20));
  REQUIRE(up);
  CHECK(up->x == 0.0);
  CHECK(up->y == doctest::Approx(1.0).epsilon(1e-15));

  CHECK_FALSE(normal_at(LevelSetField(g, 2.0), g.index(5, 5)));
}

TEST_CASE("normal_at returns unit vectors") {
  const Grid g = Grid::square(0.0, 1.0, 41);
  const LevelSetField f = sample(g, [](double x, double y) { return std::sin(3 * x) * std::cos(2 * y) + x * y; });
  for (std::size_t k = 0; k < g.size(); ++k)
    if (const auto n = normal_at(f, k)) CHECK(std::abs(norm(*n) - 1.0) <= 1e-12);
}

TEST_CASE("rebuild_band matches the brute-force distance test") {
  const Grid g = Grid::square(0.0, 3.0, 121);
  const LevelSetField f = signed_distance(InitialShape::circle({1.4, 1.6}, 0.55), g);
  const Front front = extract_front(f);
  REQUIRE(front.curves.size() == 1);
  const BandWidths w{};
  const NarrowBand band = rebuild_band(f, front, w);
  std::size_t mismatches = 0;
  for (std::size_t k = 0; k < g.size(); ++k) {
    const double d = oracle::front_distance(front, g.point(k));
    const bool active = d <= w.outer * g.h();
    const bool inner = d <= w.inner * g.h() && !g.on_boundary(k);
    // Nodes sitting on the threshold may go either way by round-off.
    const bool borderline = std::abs(d - w.outer * g.h()) < 1e-9 || std::abs(d - w.inner * g.h()) < 1e-9;
    if (borderline) continue;
    if (band.is_active(k) != active || band.is_inner(k) != inner) ++mismatches;
  }
  CHECK(mismatches == 0);
  CHECK(band.inner_count() > 0);
  CHECK(band.inner_count() < band.size());
}

TEST_CASE("rebuild_band clips at the domain boundary") {
  const Grid g = Grid::square(0.0, 1.0, 51);
  const LevelSetField f = signed_distance(InitialShape::circle({0.15, 0.5}, 0.1), g);
  const NarrowBand band = rebuild_band(f, extract_front(f), BandWidths{});
  for (std::size_t k : band.active()) CHECK(k < g.size());
  bool boundary_active = false;
  for (std::size_t k : band.active()) {
    if (g.on_boundary(k)) {
      boundary_active = true;
      CHECK_FALSE(band.is_inner(k));
    }
  }
  CHECK(boundary_active);
}

TEST_CASE("rebuild_band of an empty front is empty") {
  const Grid g = Grid::square(0.0, 1.0, 11);
  CHECK(rebuild_band(LevelSetField(g, 1.0), Front{}, BandWidths{}).empty());
}

TEST_CASE("field dump round trip") {
  const Grid g({0.5, -1.0}, 0.1, 0.2, 4, 3);
  const LevelSetField f = sample(g, [](double x, double y) { return x * 1.234567891 - y / 3.0; });
  std::stringstream s;
  write_field(s, g, f.values());
  std::string first;
  std::getline(s, first);
  CHECK(first == "4 3");
  s.seekg(0);
  const FieldFile back = read_field(s);
  CHECK(back.grid.nx() == 4);
  CHECK(back.grid.ny() == 3);
  CHECK(back.grid.dx() == doctest::Approx(0.1));
  CHECK(back.grid.origin().y == doctest::Approx(-1.0));
  REQUIRE(back.values.size() == g.size());
  for (std::size_t k = 0; k < g.size(); ++k) CHECK(back.values[k] == doctest::Approx(f[k]).epsilon(1e-8));
}
