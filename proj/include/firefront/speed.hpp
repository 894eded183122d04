#pragma once

#include <cmath>
#include <optional>

#include "firefront/geometry.hpp"

namespace firefront {

/// Parameters shared by the full and simplified firespread laws.
///
/// The flank term of the full law is c0 * U sin^2 * exp(-c2 * U sin^2);
/// some write-ups name the decay coefficient c1, it is the same quantity.
/// The head coefficient `a` is also the coefficient of the simplified law.
struct FireModelParams {
  double eps0 = 0.2;        ///< rear/flank base speed
  double eps1 = 0.0;        ///< rear wind decay (full law)
  double c0 = 0.0;          ///< flank wind gain (full law)
  double c2 = 0.0;          ///< flank wind decay (full law)
  double a = 0.5;           ///< head coefficient, speed per sqrt(wind speed)
  double m = 2.0;           ///< flank exponent
  double n = 1.5;           ///< head exponent
  double alpha_rear = 0.5;  ///< rear-to-flank speed ratio (simplified law)

  /// Throws InputError when an invariant is violated.
  void validate() const;
};

/// Signed angle in (-pi, pi] from the wind direction to the front normal.
/// Throws InputError for a zero wind vector.
double compute_theta(Vec2 wind, Vec2 normal);

double full_fire_speed(double wind_speed, double theta, const FireModelParams& p);
double simplified_fire_speed(double wind_speed, double theta, const FireModelParams& p);

enum class WindKind { kConstant, kRotating, kCounterflow };

struct WindField {
  WindKind kind = WindKind::kConstant;
  double speed = 100.0;          ///< U for constant and rotating wind
  double direction = 0.0;        ///< beta, radians from +x
  double direction_end = 0.0;    ///< rotating: angle reached at `duration`
  double duration = 0.0;         ///< rotating: sweep time, 0 for the whole run
  double strength = 100.0;       ///< counterflow u
  Vec2 stagnation{0.0, 0.0};     ///< counterflow stagnation point

  /// Largest wind magnitude over the rectangle [lo, hi] and all times.
  double max_speed(Vec2 lo, Vec2 hi) const;
};

Vec2 wind_at(const WindField& wind, double x, double y, double t);

/// Head coefficient a(x): a_near left of x_near, a_far right of x_far,
/// linear ramp in between.
struct FuelField {
  bool enabled = false;
  double a_near = 0.5;
  double a_far = 0.5;
  double x_near = 1.7;
  double x_far = 1.8;

  double head_coefficient(double x, double fallback) const;
  void validate() const;
};

enum class TerrainKind { kFlat, kHill };

/// Gaussian hill z = height * exp(-|p - center|^2 / (2 width^2)).
struct TerrainField {
  TerrainKind kind = TerrainKind::kFlat;
  Vec2 center{1.75, 1.5};
  double height = 0.1;
  double width = 0.1;

  double elevation(double x, double y) const;
  Vec2 gradient(double x, double y) const;
  /// Slope along `direction` in radians: atan(grad z . direction).
  double slope(double x, double y, Vec2 direction) const;
  /// Largest slope magnitude anywhere.
  double max_slope() const;
};

enum class SpeedModelKind { kConstant, kPiecewiseConstant, kFull, kSimplified };

/// Everything needed to turn (position, time, normal) into a normal speed.
struct SpeedConfig {
  SpeedModelKind kind = SpeedModelKind::kSimplified;
  double constant_speed = 1.0;
  double speed_left = 1.0;   ///< piecewise: x < split_x
  double speed_right = 1.0;  ///< piecewise: x >= split_x
  double split_x = 1.5;
  FireModelParams params;
  WindField wind;
  FuelField fuel;
  TerrainField terrain;

  /// True when the speed ignores the front orientation.
  bool isotropic() const;
  void validate() const;
};

/// Slope multiplier applied to every model: exp(2 s).
inline double slope_factor(double slope) { return std::exp(2.0 * slope); }

/// Normal speed at a front point. A missing normal selects the flank
/// direction (theta = pi/2) and flat slope.
double effective_speed(Vec2 p, double t, std::optional<Vec2> normal, const SpeedConfig& cfg);

/// One-sided finite-difference bound on |dF/dtheta| at a front point.
double effective_speed_slope(Vec2 p, double t, std::optional<Vec2> normal, const SpeedConfig& cfg);

/// Speed at a node for isotropic models (orientation ignored).
double isotropic_speed(Vec2 p, const SpeedConfig& cfg);

/// A priori bound on |H'| over the domain, used for the CFL step and the
/// global Lax-Friedrichs dissipation. For the fire laws this is
/// a (m + 1) sqrt(U_max) plus the eps0 contributions, scaled by the
/// steepest slope factor.
double hamiltonian_bound(const SpeedConfig& cfg, Vec2 lo, Vec2 hi);

}  // namespace firefront
