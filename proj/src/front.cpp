#include "firefront/front.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "firefront/error.hpp"
#include "firefront/speed.hpp"
#include "spatial_hash.hpp"

namespace firefront {

double signed_area(const Curve& curve) {
  const auto& v = curve.vertices;
  double twice = 0.0;
  for (std::size_t k = 0; k < v.size(); ++k)
    twice += cross(v[k].position, v[(k + 1) % v.size()].position);
  return 0.5 * twice;
}

double burned_area(const Front& front) {
  double total = 0.0;
  for (const auto& c : front.curves) total += signed_area(c);
  return total;
}

InitialShape InitialShape::circle(Vec2 center, double radius) {
  InitialShape s;
  s.circles.push_back({center, radius});
  return s;
}

Polygon InitialShape::square(Vec2 center, double side) {
  const double h = 0.5 * side;
  return {{{center.x - h, center.y - h}, {center.x + h, center.y - h},
           {center.x + h, center.y + h}, {center.x - h, center.y + h}}};
}

namespace {

bool segments_cross(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  const double d1 = cross(b - a, c - a);
  const double d2 = cross(b - a, d - a);
  const double d3 = cross(d - c, a - c);
  const double d4 = cross(d - c, b - c);
  return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0)) && d1 != 0 && d2 != 0 && d3 != 0 && d4 != 0;
}

void validate_polygon(const Polygon& poly, const Grid& grid, const char* what) {
  const auto& p = poly.points;
  if (p.size() < 3) throw InputError(std::string(what) + " needs at least 3 points");
  for (Vec2 q : p)
    if (!grid.contains(q)) throw InputError(std::string(what) + " lies outside the domain");
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (j == i + 1 || (i == 0 && j == n - 1)) continue;
      if (segments_cross(p[i], p[(i + 1) % n], p[j], p[(j + 1) % n]))
        throw InputError(std::string(what) + " is self-intersecting");
    }
  }
}

// Even-odd rule.
bool inside_polygon(const Polygon& poly, Vec2 q) {
  const auto& p = poly.points;
  bool in = false;
  for (std::size_t i = 0, j = p.size() - 1; i < p.size(); j = i++) {
    if ((p[i].y > q.y) != (p[j].y > q.y)) {
      const double x = p[j].x + (q.y - p[j].y) * (p[i].x - p[j].x) / (p[i].y - p[j].y);
      if (q.x < x) in = !in;
    }
  }
  return in;
}

double polygon_signed_distance(const Polygon& poly, Vec2 q) {
  const auto& p = poly.points;
  double d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < p.size(); ++i)
    d = std::min(d, segment_distance(q, p[i], p[(i + 1) % p.size()]));
  return inside_polygon(poly, q) ? -d : d;
}

}  // namespace

void InitialShape::validate(const Grid& grid) const {
  if (circles.empty() && polygons.empty()) throw InputError("initial shape is empty");
  for (const Circle& c : circles) {
    if (!(c.radius > 0.0)) throw InputError("circle radius must be positive");
    const Vec2 r{c.radius, c.radius};
    if (!grid.contains(c.center - r) || !grid.contains(c.center + r))
      throw InputError("circle lies outside the domain");
  }
  for (const Polygon& p : polygons) validate_polygon(p, grid, "polygon");
  for (const Polygon& p : islands) validate_polygon(p, grid, "island");
}

double shape_signed_distance(const InitialShape& shape, Vec2 p) {
  double burned = std::numeric_limits<double>::infinity();
  for (const Circle& c : shape.circles) burned = std::min(burned, distance(p, c.center) - c.radius);
  for (const Polygon& poly : shape.polygons) burned = std::min(burned, polygon_signed_distance(poly, p));
  double island = std::numeric_limits<double>::infinity();
  for (const Polygon& poly : shape.islands) island = std::min(island, polygon_signed_distance(poly, p));
  return std::max(burned, -island);
}

LevelSetField signed_distance(const InitialShape& shape, const Grid& grid) {
  shape.validate(grid);
  LevelSetField field(grid);
  auto v = field.values();
#pragma omp parallel for schedule(static)
  for (int j = 0; j < grid.ny(); ++j)
    for (int i = 0; i < grid.nx(); ++i) v[grid.index(i, j)] = shape_signed_distance(shape, grid.point(i, j));
  field.sync_buffer();
  return field;
}

namespace {

// Marching squares over the cells whose lower-left corner is listed.
class ContourBuilder {
 public:
  ContourBuilder(const Grid& grid, std::span<const double> values, const LevelSetField* normals)
      : grid_(grid), v_(values), normals_(normals) {}

  void add_cell(int i, int j) {
    const std::size_t k0 = grid_.index(i, j);
    const std::size_t k[4] = {k0, k0 + 1, k0 + 1 + grid_.nx(), k0 + grid_.nx()};
    const double f[4] = {v_[k[0]], v_[k[1]], v_[k[2]], v_[k[3]]};
    const bool neg[4] = {f[0] < 0.0, f[1] < 0.0, f[2] < 0.0, f[3] < 0.0};
    if (neg[0] == neg[1] && neg[1] == neg[2] && neg[2] == neg[3]) return;

    // Edges: 0 bottom (c0-c1), 1 right (c1-c2), 2 top (c2-c3), 3 left (c3-c0).
    static constexpr int kEnds[4][2] = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    const std::uint64_t base = static_cast<std::uint64_t>(k0) * 2;
    const std::uint64_t edge_key[4] = {base, (base + 2) + 1, base + 2 * grid_.nx(), base + 1};
    int vert[4] = {-1, -1, -1, -1};
    for (int e = 0; e < 4; ++e) {
      const int a = kEnds[e][0], b = kEnds[e][1];
      if (neg[a] != neg[b]) vert[e] = crossing(edge_key[e], k[a], k[b], f[a], f[b]);
    }

    // Walking the cell boundary counterclockwise, edge e runs from corner e
    // to corner e + 1. A segment leaves through an edge where the walk goes
    // from negative to positive and closes at an edge going back, which puts
    // the negative side on its left. Saddles pair each exit with the entry
    // after it when the cell center is negative (the negative corners join)
    // and with the entry before it otherwise.
    const bool saddle = (vert[0] >= 0) + (vert[1] >= 0) + (vert[2] >= 0) + (vert[3] >= 0) == 4;
    const bool join_negative = !saddle || 0.25 * (f[0] + f[1] + f[2] + f[3]) < 0.0;
    auto is_entry = [&](int e) { return !neg[e] && neg[(e + 1) % 4]; };
    for (int e = 0; e < 4; ++e) {
      if (!(neg[e] && !neg[(e + 1) % 4])) continue;
      for (int step = 1; step < 4; ++step) {
        const int other = join_negative ? (e + step) % 4 : (e + 4 - step) % 4;
        if (is_entry(other)) {
          link(vert[e], vert[other]);
          break;
        }
      }
    }
  }

  Front finish() {
    Front front;
    std::vector<char> used(positions_.size(), 0);
    std::vector<char> has_prev(positions_.size(), 0);
    for (int n : next_)
      if (n >= 0) has_prev[n] = 1;
    auto walk = [&](int start) {
      Curve curve;
      int v = start;
      while (v >= 0 && !used[v]) {
        used[v] = 1;
        FrontVertex fv;
        fv.position = positions_[v];
        fv.normal = normals_vec_[v];
        fv.normal_degenerate = degenerate_[v];
        const auto& vs = curve.vertices;
        if (vs.empty() || distance(vs.back().position, fv.position) > 1e-12 * grid_.h())
          curve.vertices.push_back(fv);
        v = next_[v];
      }
      auto& vs = curve.vertices;
      while (vs.size() > 1 && distance(vs.front().position, vs.back().position) <= 1e-12 * grid_.h())
        vs.pop_back();
      if (vs.size() >= 3) front.curves.push_back(std::move(curve));
    };
    // Open chains (clipped by the domain boundary) first, then loops.
    for (std::size_t s = 0; s < positions_.size(); ++s)
      if (!has_prev[s] && !used[s]) walk(static_cast<int>(s));
    for (std::size_t s = 0; s < positions_.size(); ++s)
      if (!used[s]) walk(static_cast<int>(s));
    return front;
  }

 private:
  int crossing(std::uint64_t key, std::size_t ka, std::size_t kb, double fa, double fb) {
    const auto [it, inserted] = index_.try_emplace(key, static_cast<int>(positions_.size()));
    if (!inserted) return it->second;
    if (kb < ka) {
      std::swap(ka, kb);
      std::swap(fa, fb);
    }
    const double t = fa / (fa - fb);
    const Vec2 pa = grid_.point(ka), pb = grid_.point(kb);
    positions_.push_back(pa + (pb - pa) * t);
    next_.push_back(-1);
    Vec2 n{1.0, 0.0};
    bool degenerate = true;
    if (normals_) {
      const auto na = normal_at(*normals_, ka);
      const auto nb = normal_at(*normals_, kb);
      Vec2 blend{};
      if (na) blend = blend + *na * (1.0 - t);
      if (nb) blend = blend + *nb * t;
      const double len = norm(blend);
      if (len > kDegenerateGradient) {
        n = blend * (1.0 / len);
        degenerate = false;
      }
    }
    normals_vec_.push_back(n);
    degenerate_.push_back(degenerate);
    return it->second;
  }

  void link(int from, int to) {
    if (next_[from] < 0) next_[from] = to;
  }

  const Grid& grid_;
  std::span<const double> v_;
  const LevelSetField* normals_;
  std::unordered_map<std::uint64_t, int> index_;
  std::vector<Vec2> positions_;
  std::vector<Vec2> normals_vec_;
  std::vector<char> degenerate_;
  std::vector<int> next_;
};

}  // namespace

Front extract_front(const LevelSetField& field, const NarrowBand& band) {
  const Grid& g = field.grid();
  ContourBuilder builder(g, field.values(), &field);
  for (std::size_t k : band.active()) {
    const int i = g.col(k), j = g.row(k);
    if (i + 1 < g.nx() && j + 1 < g.ny()) builder.add_cell(i, j);
  }
  return builder.finish();
}

Front extract_front(const LevelSetField& field) {
  const Grid& g = field.grid();
  ContourBuilder builder(g, field.values(), &field);
  for (int j = 0; j + 1 < g.ny(); ++j)
    for (int i = 0; i + 1 < g.nx(); ++i) builder.add_cell(i, j);
  return builder.finish();
}

Front extract_contour(const Grid& grid, std::span<const double> values) {
  ContourBuilder builder(grid, values, nullptr);
  for (int j = 0; j + 1 < grid.ny(); ++j)
    for (int i = 0; i + 1 < grid.nx(); ++i) builder.add_cell(i, j);
  return builder.finish();
}

namespace {

struct Segment {
  Vec2 a, b;
};

std::vector<Segment> front_segments(const Front& front) {
  std::vector<Segment> segs;
  segs.reserve(front.vertex_count());
  for (const Curve& c : front.curves) {
    const auto& v = c.vertices;
    for (std::size_t s = 0; s < v.size(); ++s) segs.push_back({v[s].position, v[(s + 1) % v.size()].position});
  }
  return segs;
}

double bucket_size(const Grid& g) { return 4.0 * g.h(); }

// Distance functions here are convex, so their max over a box is at a corner.
template <class Fn>
double corner_max(const detail::Rect& r, Fn&& fn) {
  return std::max({fn(r.lo), fn(r.hi), fn({r.lo.x, r.hi.y}), fn({r.hi.x, r.lo.y})});
}

}  // namespace

double front_distance(const Front& front, Vec2 p) {
  double d = std::numeric_limits<double>::infinity();
  for (const Segment& s : front_segments(front)) d = std::min(d, segment_distance(p, s.a, s.b));
  return d;
}

void reinitialize(LevelSetField& field, const Front& front, const NarrowBand& band) {
  if (front.empty()) throw ContractViolation("cannot reinitialize from an empty front");
  const Grid& g = field.grid();
  const std::vector<Segment> segs = front_segments(front);
  detail::BucketGrid buckets(g.origin(), g.upper(), bucket_size(g));
  for (const Segment& s : segs) buckets.count(s.a, s.b);
  buckets.build();
  for (std::size_t s = 0; s < segs.size(); ++s) buckets.place(segs[s].a, segs[s].b, s);

  auto v = field.values();
  const auto active = band.active();
  std::vector<Vec2> nodes(active.size());
  for (std::size_t n = 0; n < active.size(); ++n) nodes[n] = g.point(active[n]);
  std::vector<detail::Rect> boxes(segs.size());
  for (std::size_t s = 0; s < segs.size(); ++s)
    boxes[s] = {{std::min(segs[s].a.x, segs[s].b.x), std::min(segs[s].a.y, segs[s].b.y)},
                {std::max(segs[s].a.x, segs[s].b.x), std::max(segs[s].a.y, segs[s].b.y)}};
  const auto hits = detail::nearest_batch(
      buckets, nodes, [&](Vec2 p, std::size_t s) { return segment_distance(p, segs[s].a, segs[s].b); },
      [&](const detail::Rect& r, std::size_t s) { return detail::rect_rect_distance(r, boxes[s]); },
      [&](const detail::Rect& r, std::size_t s) { return corner_max(r, [&](Vec2 c) {
        return segment_distance(c, segs[s].a, segs[s].b); }); });
  for (std::size_t n = 0; n < active.size(); ++n) {
    const std::size_t k = active[n];
    const double d = hits[n].first;
    v[k] = v[k] > 0.0 ? d : (v[k] < 0.0 ? -d : 0.0);
  }
}

VelocityExtension extend_velocity(const Front& front, const NarrowBand& band, const Grid& grid) {
  if (front.empty()) throw ContractViolation("cannot extend velocity from an empty front");
  std::vector<const FrontVertex*> verts;
  verts.reserve(front.vertex_count());
  for (const Curve& c : front.curves)
    for (const FrontVertex& v : c.vertices) verts.push_back(&v);

  detail::BucketGrid buckets(grid.origin(), grid.upper(), bucket_size(grid));
  for (const auto* v : verts) buckets.count(v->position, v->position);
  buckets.build();
  for (std::size_t s = 0; s < verts.size(); ++s) buckets.place(verts[s]->position, verts[s]->position, s);

  const auto active = band.active();
  std::vector<Vec2> nodes(active.size());
  for (std::size_t n = 0; n < active.size(); ++n) nodes[n] = grid.point(active[n]);
  std::vector<Vec2> pos(verts.size());
  for (std::size_t s = 0; s < verts.size(); ++s) pos[s] = verts[s]->position;
  const auto hits = detail::nearest_batch(
      buckets, nodes,
      [&](Vec2 p, std::size_t s) {
        const Vec2 d = p - pos[s];
        return dot(d, d);
      },
      [&](const detail::Rect& r, std::size_t s) { return detail::rect_distance(r, pos[s]); },
      [&](const detail::Rect& r, std::size_t s) { return corner_max(r, [&](Vec2 c) { return distance(c, pos[s]); }); });
  VelocityExtension ext;
  ext.speed.resize(active.size());
  ext.speed_slope.resize(active.size());
  ext.nearest.resize(active.size());
  for (std::size_t n = 0; n < active.size(); ++n) {
    const std::size_t idx = hits[n].second;
    ext.nearest[n] = idx;
    ext.speed[n] = verts[idx]->speed;
    ext.speed_slope[n] = verts[idx]->speed_slope;
  }
  return ext;
}

VelocityExtension uniform_extension(const NarrowBand& band, double speed) {
  VelocityExtension ext;
  ext.speed.assign(band.size(), speed);
  ext.speed_slope.assign(band.size(), 0.0);
  ext.nearest.assign(band.size(), 0);
  return ext;
}

void sample_front_speeds(Front& front, double t, const SpeedConfig& cfg) {
  for (Curve& c : front.curves) {
    for (FrontVertex& v : c.vertices) {
      const std::optional<Vec2> n = v.normal_degenerate ? std::nullopt : std::optional<Vec2>(v.normal);
      v.speed = effective_speed(v.position, t, n, cfg);
      v.speed_slope = effective_speed_slope(v.position, t, n, cfg);
    }
  }
}

void write_front(std::ostream& out, const Front& front, double t) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "t=%.9g curves=%zu", t, front.curves.size());
  out << buf << '\n';
  for (std::size_t c = 0; c < front.curves.size(); ++c) {
    if (c > 0) out << '\n';
    for (const FrontVertex& v : front.curves[c].vertices) {
      std::snprintf(buf, sizeof buf, "%.9g %.9g", v.position.x, v.position.y);
      out << buf << '\n';
    }
  }
}

void write_front(const std::string& path, const Front& front, double t) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open snapshot file for writing: " + path);
  write_front(out, front, t);
}

FrontSnapshot read_front(std::istream& in) {
  FrontSnapshot snap;
  std::string line;
  if (!std::getline(in, line)) throw InputError("empty snapshot");
  std::size_t count = 0;
  if (std::sscanf(line.c_str(), "t=%lf curves=%zu", &snap.t, &count) != 2)
    throw InputError("malformed snapshot header: " + line);
  Curve current;
  auto flush = [&] {
    if (!current.vertices.empty()) snap.front.curves.push_back(std::move(current));
    current = Curve{};
  };
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      flush();
      continue;
    }
    std::istringstream ls(line);
    FrontVertex v;
    if (!(ls >> v.position.x >> v.position.y)) throw InputError("malformed snapshot line: " + line);
    current.vertices.push_back(v);
  }
  flush();
  if (snap.front.curves.size() != count) throw InputError("snapshot curve count mismatch");
  return snap;
}

FrontSnapshot read_front(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open snapshot file: " + path);
  return read_front(in);
}

}  // namespace firefront
