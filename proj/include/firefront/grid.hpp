#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "firefront/geometry.hpp"

namespace firefront {

/// Uniform node-centered orthogonal mesh. Node (i, j) sits at
/// origin + (i * dx, j * dy); storage is row-major with i fastest.
class Grid {
 public:
  Grid() = default;
  Grid(Vec2 origin, double dx, double dy, int nx, int ny);

  /// Square domain [lo, hi]^2 with n nodes per axis.
  static Grid square(double lo, double hi, int n);

  Vec2 origin() const { return origin_; }
  double dx() const { return dx_; }
  double dy() const { return dy_; }
  double h() const { return dx_ > dy_ ? dx_ : dy_; }
  int nx() const { return nx_; }
  int ny() const { return ny_; }
  std::size_t size() const { return static_cast<std::size_t>(nx_) * ny_; }
  Vec2 upper() const { return {x(nx_ - 1), y(ny_ - 1)}; }

  double x(int i) const { return origin_.x + i * dx_; }
  double y(int j) const { return origin_.y + j * dy_; }
  Vec2 point(int i, int j) const { return {x(i), y(j)}; }
  Vec2 point(std::size_t k) const { return point(col(k), row(k)); }

  std::size_t index(int i, int j) const { return static_cast<std::size_t>(j) * nx_ + i; }
  int col(std::size_t k) const { return static_cast<int>(k % nx_); }
  int row(std::size_t k) const { return static_cast<int>(k / nx_); }

  /// Nearest node to a coordinate; exact for node-aligned points.
  int nearest_col(double px) const;
  int nearest_row(double py) const;

  bool on_boundary(int i, int j) const { return i == 0 || j == 0 || i == nx_ - 1 || j == ny_ - 1; }
  bool on_boundary(std::size_t k) const { return on_boundary(col(k), row(k)); }
  bool contains(Vec2 p) const;

  bool operator==(const Grid&) const = default;

 private:
  Vec2 origin_;
  double dx_ = 1.0;
  double dy_ = 1.0;
  int nx_ = 2;
  int ny_ = 2;
};

/// Signed node values on a grid plus a back buffer for explicit stepping.
/// Negative inside the burned region, positive outside.
class LevelSetField {
 public:
  LevelSetField() = default;
  explicit LevelSetField(const Grid& grid, double fill = 0.0);

  const Grid& grid() const { return grid_; }
  std::span<double> values() { return values_; }
  std::span<const double> values() const { return values_; }
  std::span<double> buffer() { return buffer_; }
  std::span<const double> buffer() const { return buffer_; }

  double& operator[](std::size_t k) { return values_[k]; }
  double operator[](std::size_t k) const { return values_[k]; }
  double at(int i, int j) const { return values_[grid_.index(i, j)]; }

  /// Makes the back buffer the current field.
  void swap_buffers() { values_.swap(buffer_); }
  /// Copies the current field into the back buffer.
  void sync_buffer() { buffer_ = values_; }

 private:
  Grid grid_;
  std::vector<double> values_;
  std::vector<double> buffer_;
};

struct BandWidths {
  int outer = 12;
  int inner = 6;
};

/// Nodes updated by the narrow-band solver. `inner` marks the tube the front
/// must stay inside; leaving it triggers a rebuild.
class NarrowBand {
 public:
  NarrowBand() = default;
  NarrowBand(const Grid& grid, BandWidths widths);

  /// Every node active; interior nodes inner. Used by full-matrix schemes.
  static NarrowBand full(const Grid& grid);

  void add(std::size_t k, bool inner);
  /// Sorts the active list so iteration order is deterministic.
  void finalize();

  std::span<const std::size_t> active() const { return active_; }
  std::size_t size() const { return active_.size(); }
  bool empty() const { return active_.empty(); }
  bool is_active(std::size_t k) const { return mask_[k] != 0; }
  bool is_inner(std::size_t k) const { return mask_[k] == 2; }
  bool is_full() const { return full_; }
  BandWidths widths() const { return widths_; }
  std::size_t inner_count() const;

 private:
  std::vector<std::size_t> active_;
  std::vector<std::uint8_t> mask_;
  BandWidths widths_;
  bool full_ = false;
};

struct OneSidedDiffs {
  double plus_x = 0.0;
  double minus_x = 0.0;
  double plus_y = 0.0;
  double minus_y = 0.0;
};

enum class StencilPolicy {
  /// Every in-domain neighbor must be active in the band.
  kRequireActive,
  /// Neighbors outside the band contribute their stored value.
  kUseStored,
};

/// Forward and backward difference quotients at a node. On the domain
/// boundary the missing side falls back to the available one.
OneSidedDiffs diff_ops(const LevelSetField& field, std::size_t node,
                       const NarrowBand* band = nullptr,
                       StencilPolicy policy = StencilPolicy::kUseStored);

inline constexpr double kDegenerateGradient = 1e-8;

/// Central-difference gradient (one-sided at the boundary).
Vec2 central_gradient(const LevelSetField& field, std::size_t node);

/// Unit outward normal from the central gradient, or nullopt when the
/// gradient norm is at most kDegenerateGradient.
std::optional<Vec2> normal_at(const LevelSetField& field, std::size_t node);

/// Nodes within widths.outer * h of the front; inner analogous, excluding
/// domain-boundary nodes. An empty front gives an empty band.
NarrowBand rebuild_band(const LevelSetField& field, const Front& front, BandWidths widths);

/// ASCII dump: "nx ny", "dx dy", "x0 y0" header, then one line per mesh row.
void write_field(std::ostream& out, const Grid& grid, std::span<const double> values);
void write_field(const std::string& path, const Grid& grid, std::span<const double> values);

struct FieldFile {
  Grid grid;
  std::vector<double> values;
};
FieldFile read_field(std::istream& in);

}  // namespace firefront
