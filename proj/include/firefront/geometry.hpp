#pragma once

#include <cmath>
#include <vector>

namespace firefront {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  constexpr bool operator==(const Vec2&) const = default;
};

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::sqrt(a.x * a.x + a.y * a.y); }
inline double distance(Vec2 a, Vec2 b) { return norm(a - b); }

/// Closest distance from p to the segment [a, b].
inline double segment_distance(Vec2 p, Vec2 a, Vec2 b) {
  const Vec2 ab = b - a;
  const double len2 = dot(ab, ab);
  double t = len2 > 0.0 ? dot(p - a, ab) / len2 : 0.0;
  t = t < 0.0 ? 0.0 : (t > 1.0 ? 1.0 : t);
  return distance(p, a + ab * t);
}

/// A point of the discretized front. `speed` is filled in by the simulator
/// before velocity extension.
struct FrontVertex {
  Vec2 position;
  Vec2 normal{1.0, 0.0};
  bool normal_degenerate = false;
  double speed = 0.0;
  /// Bound on |dF/dtheta| at this vertex, used by local Lax-Friedrichs.
  double speed_slope = 0.0;
};

/// Closed polyline; the last vertex connects back to the first.
/// Oriented with the burned side (negative level set) on the left, so outer
/// boundaries run counterclockwise and islands clockwise.
struct Curve {
  std::vector<FrontVertex> vertices;
};

struct Front {
  std::vector<Curve> curves;

  bool empty() const { return curves.empty(); }
  std::size_t vertex_count() const {
    std::size_t n = 0;
    for (const auto& c : curves) n += c.vertices.size();
    return n;
  }
};

/// Shoelace area, positive for counterclockwise curves.
double signed_area(const Curve& curve);

/// Total burned area: outer curves add, islands subtract.
double burned_area(const Front& front);

}  // namespace firefront
