#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "firefront/error.hpp"
#include "firefront/speed.hpp"

using namespace firefront;
using std::numbers::pi;

namespace {

FireModelParams reference_params() {
  FireModelParams p;
  p.eps0 = 0.2;
  p.a = 0.5;
  p.n = 1.5;
  p.alpha_rear = 0.5;
  return p;
}

SpeedConfig reference_speed() {
  SpeedConfig s;
  s.kind = SpeedModelKind::kSimplified;
  s.params = reference_params();
  s.wind.kind = WindKind::kConstant;
  s.wind.speed = 100.0;
  s.wind.direction = 0.0;
  return s;
}

}  // namespace

TEST_CASE("compute_theta conventions") {
  CHECK(compute_theta({1, 0}, {1, 0}) == 0.0);
  CHECK(compute_theta({1, 0}, {0, 1}) == doctest::Approx(pi / 2));
  CHECK(compute_theta({1, 0}, {0, -1}) == doctest::Approx(-pi / 2));
  CHECK(compute_theta({1, 0}, {-1, 0}) == doctest::Approx(pi));
  CHECK(compute_theta({1, 0}, {-1, -0.0}) == doctest::Approx(pi));
  CHECK(compute_theta({0, 3}, {0, 1}) == 0.0);
  CHECK_THROWS_AS(compute_theta({0, 0}, {1, 0}), InputError);
}

TEST_CASE("simplified law at head, flank and rear") {
  const FireModelParams p = reference_params();
  CHECK(simplified_fire_speed(100, 0.0, p) == doctest::Approx(5.2).epsilon(1e-14));
  CHECK(simplified_fire_speed(100, pi / 2, p) == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(simplified_fire_speed(100, pi, p) == doctest::Approx(0.1).epsilon(1e-12));
  CHECK_THROWS_AS(simplified_fire_speed(-1, 0.0, p), InputError);
}

TEST_CASE("full law special values") {
  FireModelParams p = reference_params();
  CHECK(full_fire_speed(100, 0.0, p) == doctest::Approx(5.2).epsilon(1e-14));
  p.eps1 = 0.0;
  CHECK(full_fire_speed(100, pi, p) == doctest::Approx(p.eps0).epsilon(1e-14));
  for (double th : {-1.2, -0.4, 0.0, 0.3, 1.0, pi / 2})
    CHECK(full_fire_speed(0, th, p) == doctest::Approx(p.eps0).epsilon(1e-14));
  CHECK_THROWS_AS(full_fire_speed(-2, 0.0, p), InputError);
}

TEST_CASE("laws are continuous at the flank, even, non-negative") {
  std::mt19937 rng(20240611);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    FireModelParams p;
    p.eps0 = unit(rng);
    p.eps1 = unit(rng) * 0.05;
    p.c0 = unit(rng) * 0.02;
    p.c2 = unit(rng) * 0.05;
    p.a = unit(rng);
    p.m = 0.5 + 2.0 * unit(rng);
    p.n = 0.5 + 2.0 * unit(rng);
    p.alpha_rear = unit(rng);
    const double u = 200.0 * unit(rng);
    const double past = std::nextafter(pi / 2, 4.0);
    for (auto law : {&full_fire_speed, &simplified_fire_speed}) {
      CHECK(std::abs(law(u, pi / 2, p) - law(u, past, p)) < 1e-6);
      const double th = pi * (2.0 * unit(rng) - 1.0);
      CHECK(law(u, th, p) == law(u, -th, p));
      CHECK(law(u, th, p) >= 0.0);
    }
  }
}

TEST_CASE("simplified law decreases from head to rear") {
  const FireModelParams p = reference_params();
  double prev = simplified_fire_speed(100, 0.0, p);
  for (int k = 1; k <= 400; ++k) {
    const double f = simplified_fire_speed(100, pi * k / 400.0, p);
    CHECK(f <= prev + 1e-15);
    prev = f;
  }
}

TEST_CASE("winds") {
  WindField cf;
  cf.kind = WindKind::kCounterflow;
  cf.strength = 100.0;
  cf.stagnation = {1.5, 1.5};
  const Vec2 w = wind_at(cf, 1.51, 1.52, 0.0);
  CHECK(w.x == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK(w.y == doctest::Approx(2.0).epsilon(1e-9));
  const Vec2 still = wind_at(cf, 1.5, 1.5, 0.3);
  CHECK(still.x == 0.0);
  CHECK(still.y == 0.0);

  WindField c;
  c.speed = 100.0;
  for (double x : {0.0, 1.3, 2.9}) {
    const Vec2 v = wind_at(c, x, 3.0 - x, 0.05);
    CHECK(v.x == 100.0);
    CHECK(v.y == 0.0);
  }

  WindField r;
  r.kind = WindKind::kRotating;
  r.speed = 100.0;
  r.direction = 0.0;
  r.direction_end = pi / 2;
  r.duration = 0.1;
  const Vec2 start = wind_at(r, 1, 1, 0.0);
  const Vec2 mid = wind_at(r, 1, 1, 0.05);
  const Vec2 end = wind_at(r, 1, 1, 0.1);
  CHECK(start.x == doctest::Approx(100.0));
  CHECK(std::abs(start.y) < 1e-12);
  CHECK(mid.x == doctest::Approx(mid.y));
  CHECK(std::abs(end.x) < 1e-12);
  CHECK(end.y == doctest::Approx(100.0));
}

TEST_CASE("fuel ramp") {
  FuelField f;
  f.enabled = true;
  f.a_near = 0.5;
  f.a_far = 0.25;
  CHECK(f.head_coefficient(1.0, 9.0) == 0.5);
  CHECK(f.head_coefficient(1.7, 9.0) == 0.5);
  CHECK(f.head_coefficient(1.75, 9.0) == doctest::Approx(0.375));
  CHECK(f.head_coefficient(1.8, 9.0) == 0.25);
  CHECK(f.head_coefficient(2.5, 9.0) == 0.25);
  f.enabled = false;
  CHECK(f.head_coefficient(2.5, 9.0) == 9.0);
  f.enabled = true;
  f.x_far = f.x_near;
  CHECK_THROWS_AS(f.validate(), InputError);
}

TEST_CASE("effective speed composition") {
  const SpeedConfig s = reference_speed();
  CHECK(effective_speed({1.0, 1.0}, 0.0, Vec2{1, 0}, s) == doctest::Approx(5.2).epsilon(1e-14));
  CHECK(effective_speed({1.0, 1.0}, 0.0, Vec2{-1, 0}, s) == doctest::Approx(0.1).epsilon(1e-12));
  // A missing normal falls back to the flank speed.
  CHECK(effective_speed({1.0, 1.0}, 0.0, std::nullopt, s) == doctest::Approx(0.2).epsilon(1e-12));

  CHECK(slope_factor(0.0) == 1.0);
  CHECK(slope_factor(0.5) == doctest::Approx(std::exp(1.0)).epsilon(1e-15));

  // Unit speed on a hill: e^{2s} with s the slope along the normal.
  SpeedConfig hill;
  hill.kind = SpeedModelKind::kConstant;
  hill.constant_speed = 1.0;
  hill.terrain.kind = TerrainKind::kHill;
  hill.terrain.center = {1.75, 1.5};
  hill.terrain.height = 0.1;
  hill.terrain.width = 0.1;
  const Vec2 p{1.65, 1.5};
  const double up = std::atan(hill.terrain.gradient(p.x, p.y).x);
  CHECK(up > 0.0);
  CHECK(effective_speed(p, 0.0, Vec2{1, 0}, hill) == doctest::Approx(std::exp(2.0 * up)).epsilon(1e-14));
  CHECK(effective_speed(p, 0.0, Vec2{-1, 0}, hill) < 1.0);
  CHECK(effective_speed(p, 0.0, Vec2{0, 1}, hill) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_FALSE(hill.isotropic());
}

TEST_CASE("terrain slope") {
  TerrainField flat;
  CHECK(flat.slope(1.0, 2.0, {1, 0}) == 0.0);
  TerrainField hill;
  hill.kind = TerrainKind::kHill;
  const double h = 1e-6;
  const Vec2 g = hill.gradient(1.7, 1.55);
  CHECK(g.x == doctest::Approx((hill.elevation(1.7 + h, 1.55) - hill.elevation(1.7 - h, 1.55)) / (2 * h)).epsilon(1e-6));
  CHECK(g.y == doctest::Approx((hill.elevation(1.7, 1.55 + h) - hill.elevation(1.7, 1.55 - h)) / (2 * h)).epsilon(1e-6));
  CHECK(std::abs(hill.slope(1.7, 1.55, {1, 0})) <= hill.max_slope());
}

TEST_CASE("parameter validation") {
  FireModelParams p = reference_params();
  CHECK_NOTHROW(p.validate());
  p.alpha_rear = 1.5;
  CHECK_THROWS_AS(p.validate(), InputError);
  p = reference_params();
  p.eps0 = -0.1;
  CHECK_THROWS_AS(p.validate(), InputError);
  p = reference_params();
  p.n = 0.0;
  CHECK_THROWS_AS(p.validate(), InputError);

  SpeedConfig s = reference_speed();
  CHECK_THROWS_AS(isotropic_speed({1, 1}, s), AnisotropicHamiltonian);
}

TEST_CASE("hamiltonian bound of the reference law") {
  const SpeedConfig s = reference_speed();
  // a (m + 1) sqrt(U) + eps0
  CHECK(hamiltonian_bound(s, {0, 0}, {3, 3}) == doctest::Approx(0.5 * 3.0 * 10.0 + 0.2));
  // The head speed never exceeds the bound.
  CHECK(hamiltonian_bound(s, {0, 0}, {3, 3}) >= 5.2);
}
