#include "firefront/speed.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "firefront/error.hpp"

namespace firefront {

using std::numbers::pi;

void FireModelParams::validate() const {
  if (!(eps0 >= 0.0)) throw InputError("eps0 must be >= 0");
  if (!(a >= 0.0)) throw InputError("head coefficient a must be >= 0");
  if (!(alpha_rear >= 0.0 && alpha_rear <= 1.0)) throw InputError("alpha_rear must lie in [0, 1]");
  if (!(n > 0.0)) throw InputError("head exponent n must be > 0");
  if (!(m > 0.0)) throw InputError("flank exponent m must be > 0");
  if (!(eps1 >= 0.0) || !(c0 >= 0.0) || !(c2 >= 0.0))
    throw InputError("eps1, c0 and c2 must be >= 0");
}

double compute_theta(Vec2 wind, Vec2 normal) {
  if (wind.x == 0.0 && wind.y == 0.0) throw InputError("theta is undefined for zero wind");
  const double theta = std::atan2(cross(wind, normal), dot(wind, normal));
  return theta <= -pi ? pi : theta;
}

namespace {

void check_wind_speed(double u) {
  if (!(u >= 0.0)) throw InputError("wind speed must be >= 0");
}

}  // namespace

double full_fire_speed(double wind_speed, double theta, const FireModelParams& p) {
  check_wind_speed(wind_speed);
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  const double s2 = s * s;
  const double c2 = c * c;
  const double u = wind_speed;
  double f = p.eps0 * s2 + p.c0 * u * s2 * std::exp(-p.c2 * u * s2);
  if (std::abs(theta) <= pi / 2) {
    f += p.eps0 * c2 + p.a * std::sqrt(u) * std::pow(std::max(c, 0.0), p.n);
  } else {
    f += p.eps0 * c2 * std::exp(-p.eps1 * u * c2);
  }
  return f;
}

double simplified_fire_speed(double wind_speed, double theta, const FireModelParams& p) {
  check_wind_speed(wind_speed);
  if (std::abs(theta) <= pi / 2) {
    // cos >= 0 on this branch; the clamp only absorbs round-off at +-pi/2.
    return p.eps0 + p.a * std::sqrt(wind_speed) * std::pow(std::max(std::cos(theta), 0.0), p.n);
  }
  return p.eps0 * (p.alpha_rear + (1.0 - p.alpha_rear) * std::abs(std::sin(theta)));
}

double WindField::max_speed(Vec2 lo, Vec2 hi) const {
  switch (kind) {
    case WindKind::kConstant:
    case WindKind::kRotating:
      return std::abs(speed);
    case WindKind::kCounterflow: {
      double best = 0.0;
      for (Vec2 corner : {lo, hi, Vec2{lo.x, hi.y}, Vec2{hi.x, lo.y}})
        best = std::max(best, std::abs(strength) * distance(corner, stagnation));
      return best;
    }
  }
  return 0.0;
}

Vec2 wind_at(const WindField& wind, double x, double y, double t) {
  switch (wind.kind) {
    case WindKind::kConstant:
      return {wind.speed * std::cos(wind.direction), wind.speed * std::sin(wind.direction)};
    case WindKind::kRotating: {
      const double frac = wind.duration > 0.0 ? std::clamp(t / wind.duration, 0.0, 1.0) : 1.0;
      const double beta = wind.direction + (wind.direction_end - wind.direction) * frac;
      return {wind.speed * std::cos(beta), wind.speed * std::sin(beta)};
    }
    case WindKind::kCounterflow:
      return {-wind.strength * (x - wind.stagnation.x), wind.strength * (y - wind.stagnation.y)};
  }
  return {};
}

double FuelField::head_coefficient(double x, double fallback) const {
  if (!enabled) return fallback;
  if (x <= x_near) return a_near;
  if (x >= x_far) return a_far;
  return a_near + (a_far - a_near) * (x - x_near) / (x_far - x_near);
}

void FuelField::validate() const {
  if (!enabled) return;
  if (!(a_near >= 0.0) || !(a_far >= 0.0)) throw InputError("fuel head coefficients must be >= 0");
  if (!(x_far > x_near)) throw InputError("fuel ramp needs x_far > x_near");
}

double TerrainField::elevation(double x, double y) const {
  if (kind == TerrainKind::kFlat) return 0.0;
  const double r2 = (x - center.x) * (x - center.x) + (y - center.y) * (y - center.y);
  return height * std::exp(-r2 / (2.0 * width * width));
}

Vec2 TerrainField::gradient(double x, double y) const {
  if (kind == TerrainKind::kFlat) return {};
  const double z = elevation(x, y);
  const double k = -z / (width * width);
  return {k * (x - center.x), k * (y - center.y)};
}

double TerrainField::slope(double x, double y, Vec2 direction) const {
  if (kind == TerrainKind::kFlat) return 0.0;
  return std::atan(dot(gradient(x, y), direction));
}

double TerrainField::max_slope() const {
  if (kind == TerrainKind::kFlat) return 0.0;
  // |grad z| peaks at one width from the summit.
  return std::atan(std::abs(height) / width * std::exp(-0.5));
}

bool SpeedConfig::isotropic() const {
  const bool iso_model = kind == SpeedModelKind::kConstant || kind == SpeedModelKind::kPiecewiseConstant;
  return iso_model && terrain.kind == TerrainKind::kFlat;
}

void SpeedConfig::validate() const {
  switch (kind) {
    case SpeedModelKind::kConstant:
      if (!std::isfinite(constant_speed)) throw InputError("constant speed must be finite");
      break;
    case SpeedModelKind::kPiecewiseConstant:
      if (!std::isfinite(speed_left) || !std::isfinite(speed_right))
        throw InputError("piecewise speeds must be finite");
      break;
    case SpeedModelKind::kFull:
    case SpeedModelKind::kSimplified:
      params.validate();
      fuel.validate();
      if (wind.kind != WindKind::kCounterflow && !(wind.speed >= 0.0))
        throw InputError("wind speed must be >= 0");
      break;
  }
  if (terrain.kind == TerrainKind::kHill && !(terrain.width > 0.0))
    throw InputError("hill width must be > 0");
}

namespace {

double base_speed(Vec2 p, double t, std::optional<Vec2> normal, const SpeedConfig& cfg) {
  switch (cfg.kind) {
    case SpeedModelKind::kConstant:
      return cfg.constant_speed;
    case SpeedModelKind::kPiecewiseConstant:
      return p.x < cfg.split_x ? cfg.speed_left : cfg.speed_right;
    case SpeedModelKind::kFull:
    case SpeedModelKind::kSimplified:
      break;
  }
  FireModelParams params = cfg.params;
  params.a = cfg.fuel.head_coefficient(p.x, params.a);
  const Vec2 w = wind_at(cfg.wind, p.x, p.y, t);
  const double u = norm(w);
  double theta = pi / 2;
  if (u == 0.0) {
    theta = 0.0;  // no wind: every branch collapses to the calm-air speed
  } else if (normal) {
    theta = compute_theta(w, *normal);
  }
  return cfg.kind == SpeedModelKind::kFull ? full_fire_speed(u, theta, params)
                                           : simplified_fire_speed(u, theta, params);
}

Vec2 rotate(Vec2 v, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

}  // namespace

double effective_speed(Vec2 p, double t, std::optional<Vec2> normal, const SpeedConfig& cfg) {
  const double f = base_speed(p, t, normal, cfg);
  if (cfg.terrain.kind == TerrainKind::kFlat || !normal) return f;
  return f * slope_factor(cfg.terrain.slope(p.x, p.y, *normal));
}

double effective_speed_slope(Vec2 p, double t, std::optional<Vec2> normal, const SpeedConfig& cfg) {
  if (cfg.isotropic() || !normal) return 0.0;
  constexpr double h = 1e-5;
  const double f0 = effective_speed(p, t, normal, cfg);
  const double fp = effective_speed(p, t, rotate(*normal, h), cfg);
  const double fm = effective_speed(p, t, rotate(*normal, -h), cfg);
  return std::max(std::abs(fp - f0), std::abs(f0 - fm)) / h;
}

double isotropic_speed(Vec2 p, const SpeedConfig& cfg) {
  if (!cfg.isotropic()) throw AnisotropicHamiltonian("anisotropic Hamiltonian: speed depends on the front normal");
  return base_speed(p, 0.0, std::nullopt, cfg);
}

double hamiltonian_bound(const SpeedConfig& cfg, Vec2 lo, Vec2 hi) {
  const double terrain = slope_factor(cfg.terrain.max_slope());
  switch (cfg.kind) {
    case SpeedModelKind::kConstant:
      return std::abs(cfg.constant_speed) * terrain;
    case SpeedModelKind::kPiecewiseConstant:
      return std::max(std::abs(cfg.speed_left), std::abs(cfg.speed_right)) * terrain;
    case SpeedModelKind::kFull:
    case SpeedModelKind::kSimplified:
      break;
  }
  const FireModelParams& p = cfg.params;
  const double a_max = cfg.fuel.enabled ? std::max({p.a, cfg.fuel.a_near, cfg.fuel.a_far}) : p.a;
  const double u_max = cfg.wind.max_speed(lo, hi);
  double bound = a_max * (p.m + 1.0) * std::sqrt(u_max) + p.eps0;
  if (cfg.kind == SpeedModelKind::kFull) {
    // flank gain term c0 U x exp(-c2 U x), x = sin^2 in [0, 1]
    const double flank = p.c2 > 0.0 ? std::min(p.c0 * u_max, p.c0 / (std::numbers::e * p.c2)) : p.c0 * u_max;
    bound += 2.0 * p.eps0 + 3.0 * flank;
  }
  return bound * terrain;
}

}  // namespace firefront
