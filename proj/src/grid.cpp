#include "firefront/grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>

#include "firefront/error.hpp"

namespace firefront {

Grid::Grid(Vec2 origin, double dx, double dy, int nx, int ny)
    : origin_(origin), dx_(dx), dy_(dy), nx_(nx), ny_(ny) {
  if (!(dx > 0.0) || !(dy > 0.0)) throw InputError("grid spacing must be positive");
  if (nx < 2 || ny < 2) throw InputError("grid needs at least 2 nodes per axis");
}

Grid Grid::square(double lo, double hi, int n) {
  const double h = (hi - lo) / (n - 1);
  return Grid({lo, lo}, h, h, n, n);
}

int Grid::nearest_col(double px) const {
  return static_cast<int>(std::lround((px - origin_.x) / dx_));
}

int Grid::nearest_row(double py) const {
  return static_cast<int>(std::lround((py - origin_.y) / dy_));
}

bool Grid::contains(Vec2 p) const {
  const Vec2 hi = upper();
  return p.x >= origin_.x && p.y >= origin_.y && p.x <= hi.x && p.y <= hi.y;
}

LevelSetField::LevelSetField(const Grid& grid, double fill)
    : grid_(grid), values_(grid.size(), fill), buffer_(grid.size(), fill) {}

NarrowBand::NarrowBand(const Grid& grid, BandWidths widths)
    : mask_(grid.size(), 0), widths_(widths) {
  if (widths.inner >= widths.outer || widths.inner < 1)
    throw InputError("band widths need 1 <= inner < outer");
}

NarrowBand NarrowBand::full(const Grid& grid) {
  NarrowBand band;
  band.mask_.assign(grid.size(), 0);
  band.active_.reserve(grid.size());
  band.widths_ = {grid.nx() + grid.ny(), grid.nx() + grid.ny() - 1};
  band.full_ = true;
  for (std::size_t k = 0; k < grid.size(); ++k) band.add(k, !grid.on_boundary(k));
  return band;
}

void NarrowBand::add(std::size_t k, bool inner) {
  if (mask_[k] == 0) active_.push_back(k);
  if (inner || mask_[k] == 0) mask_[k] = inner ? 2 : 1;
}

void NarrowBand::finalize() { std::sort(active_.begin(), active_.end()); }

std::size_t NarrowBand::inner_count() const {
  return static_cast<std::size_t>(std::count(mask_.begin(), mask_.end(), std::uint8_t{2}));
}

namespace {

struct Neighbor {
  bool exists;
  std::size_t k;
};

void check_neighbor(const NarrowBand* band, StencilPolicy policy, Neighbor n) {
  if (band && policy == StencilPolicy::kRequireActive && n.exists && !band->is_active(n.k))
    throw ContractViolation("stencil neighbor outside the narrow band");
}

}  // namespace

OneSidedDiffs diff_ops(const LevelSetField& field, std::size_t node, const NarrowBand* band,
                       StencilPolicy policy) {
  const Grid& g = field.grid();
  const int i = g.col(node);
  const int j = g.row(node);
  const auto v = field.values();
  const Neighbor east{i + 1 < g.nx(), node + 1};
  const Neighbor west{i > 0, node - 1};
  const Neighbor north{j + 1 < g.ny(), node + g.nx()};
  const Neighbor south{j > 0, node - g.nx()};
  for (const auto& n : {east, west, north, south}) check_neighbor(band, policy, n);

  const double c = v[node];
  OneSidedDiffs d;
  if (east.exists) d.plus_x = (v[east.k] - c) / g.dx();
  if (west.exists) d.minus_x = (c - v[west.k]) / g.dx();
  if (!east.exists) d.plus_x = d.minus_x;
  if (!west.exists) d.minus_x = d.plus_x;
  if (north.exists) d.plus_y = (v[north.k] - c) / g.dy();
  if (south.exists) d.minus_y = (c - v[south.k]) / g.dy();
  if (!north.exists) d.plus_y = d.minus_y;
  if (!south.exists) d.minus_y = d.plus_y;
  return d;
}

Vec2 central_gradient(const LevelSetField& field, std::size_t node) {
  const OneSidedDiffs d = diff_ops(field, node);
  return {0.5 * (d.plus_x + d.minus_x), 0.5 * (d.plus_y + d.minus_y)};
}

std::optional<Vec2> normal_at(const LevelSetField& field, std::size_t node) {
  const Vec2 g = central_gradient(field, node);
  const double n = norm(g);
  if (!(n > kDegenerateGradient)) return std::nullopt;
  return Vec2{g.x / n, g.y / n};
}

NarrowBand rebuild_band(const LevelSetField& field, const Front& front, BandWidths widths) {
  const Grid& g = field.grid();
  NarrowBand band(g, widths);
  if (front.empty()) return band;

  const double outer = widths.outer * g.h();
  const double inner = widths.inner * g.h();
  std::vector<double> dist(g.size(), std::numeric_limits<double>::infinity());
  std::vector<std::size_t> touched;

  for (const Curve& curve : front.curves) {
    const auto& vs = curve.vertices;
    for (std::size_t s = 0; s < vs.size(); ++s) {
      const Vec2 a = vs[s].position;
      const Vec2 b = vs[(s + 1) % vs.size()].position;
      const int i0 = std::max(0, static_cast<int>(std::ceil((std::min(a.x, b.x) - outer - g.origin().x) / g.dx())));
      const int i1 = std::min(g.nx() - 1, static_cast<int>(std::floor((std::max(a.x, b.x) + outer - g.origin().x) / g.dx())));
      const int j0 = std::max(0, static_cast<int>(std::ceil((std::min(a.y, b.y) - outer - g.origin().y) / g.dy())));
      const int j1 = std::min(g.ny() - 1, static_cast<int>(std::floor((std::max(a.y, b.y) + outer - g.origin().y) / g.dy())));
      for (int j = j0; j <= j1; ++j) {
        for (int i = i0; i <= i1; ++i) {
          const std::size_t k = g.index(i, j);
          const double d = segment_distance(g.point(i, j), a, b);
          if (d < dist[k]) {
            if (std::isinf(dist[k])) touched.push_back(k);
            dist[k] = d;
          }
        }
      }
    }
  }

  for (std::size_t k : touched) {
    if (dist[k] <= outer) band.add(k, dist[k] <= inner && !g.on_boundary(k));
  }
  band.finalize();
  return band;
}

void write_field(std::ostream& out, const Grid& grid, std::span<const double> values) {
  char buf[64];
  out << grid.nx() << ' ' << grid.ny() << '\n';
  std::snprintf(buf, sizeof buf, "%.9g %.9g", grid.dx(), grid.dy());
  out << buf << '\n';
  std::snprintf(buf, sizeof buf, "%.9g %.9g", grid.origin().x, grid.origin().y);
  out << buf << '\n';
  for (int j = 0; j < grid.ny(); ++j) {
    for (int i = 0; i < grid.nx(); ++i) {
      std::snprintf(buf, sizeof buf, "%.9g", values[grid.index(i, j)]);
      if (i > 0) out << ' ';
      out << buf;
    }
    out << '\n';
  }
}

void write_field(const std::string& path, const Grid& grid, std::span<const double> values) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open field file for writing: " + path);
  write_field(out, grid, values);
}

FieldFile read_field(std::istream& in) {
  int nx = 0, ny = 0;
  double dx = 0, dy = 0, x0 = 0, y0 = 0;
  if (!(in >> nx >> ny >> dx >> dy >> x0 >> y0)) throw InputError("malformed field header");
  FieldFile f{Grid({x0, y0}, dx, dy, nx, ny), {}};
  f.values.resize(f.grid.size());
  for (double& v : f.values)
    if (!(in >> v)) throw InputError("truncated field body");
  return f;
}

}  // namespace firefront
