#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "firefront/geometry.hpp"
#include "firefront/grid.hpp"

namespace firefront {

struct SpeedConfig;

struct Circle {
  Vec2 center;
  double radius = 0.0;
};

/// Simple polygon, vertices in either orientation, closure implicit.
struct Polygon {
  std::vector<Vec2> points;
};

/// Initial burned region: the union of circles and polygons, minus the
/// union of islands (unburned pockets strictly inside the burned region).
struct InitialShape {
  std::vector<Circle> circles;
  std::vector<Polygon> polygons;
  std::vector<Polygon> islands;

  static InitialShape circle(Vec2 center, double radius);
  static Polygon square(Vec2 center, double side);

  /// Throws InputError for non-positive radii, self-intersecting polygons or
  /// any part outside the grid domain.
  void validate(const Grid& grid) const;
};

/// Signed distance of one point to the shape boundary (negative inside).
double shape_signed_distance(const InitialShape& shape, Vec2 p);

/// Level set initialized to the signed distance to the shape.
LevelSetField signed_distance(const InitialShape& shape, const Grid& grid);

/// Zero level set as closed polylines, through edge-linear crossings with
/// marching-squares connectivity. Saddle cells are split by the sign of the
/// cell-center average. Vertex normals interpolate normal_at along the edge.
Front extract_front(const LevelSetField& field, const NarrowBand& band);
Front extract_front(const LevelSetField& field);

/// Contour of arbitrary node values at the zero level (no normals).
Front extract_contour(const Grid& grid, std::span<const double> values);

/// Sets phi <- sign(phi) * distance to the front at every band node.
/// Throws ContractViolation for an empty front.
void reinitialize(LevelSetField& field, const Front& front, const NarrowBand& band);

/// Exact distance from p to the nearest front segment (brute force).
double front_distance(const Front& front, Vec2 p);

/// Per-band-node data copied from the nearest front vertex.
struct VelocityExtension {
  std::vector<double> speed;        ///< aligned with band.active()
  std::vector<double> speed_slope;  ///< |dF/dtheta| of the same vertex
  std::vector<std::size_t> nearest; ///< flat vertex index (curve-major)
};

/// Nearest-vertex extension of vertex speeds onto the band. Ties go to the
/// lower flat vertex index. Throws ContractViolation for an empty front.
VelocityExtension extend_velocity(const Front& front, const NarrowBand& band, const Grid& grid);

/// Same value everywhere; skips the nearest-vertex search.
VelocityExtension uniform_extension(const NarrowBand& band, double speed);

/// Evaluates the speed law at every vertex with its own normal.
void sample_front_speeds(Front& front, double t, const SpeedConfig& cfg);

/// Snapshot text: "t=<time> curves=<count>" then one blank-line-separated
/// block of "x y" lines per curve, 9 significant digits.
void write_front(std::ostream& out, const Front& front, double t);
void write_front(const std::string& path, const Front& front, double t);

struct FrontSnapshot {
  double t = 0.0;
  Front front;
};
FrontSnapshot read_front(std::istream& in);
FrontSnapshot read_front(const std::string& path);

}  // namespace firefront
