#include "firefront/fmm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "firefront/error.hpp"
#include "firefront/speed.hpp"

namespace firefront {

ArrivalField::ArrivalField(const Grid& grid)
    : grid_(grid), time_(grid.size(), std::numeric_limits<double>::infinity()), state_(grid.size(), State::kFar) {}

namespace {

struct HeapEntry {
  double t;
  std::size_t k;
  bool operator>(const HeapEntry& o) const { return t > o.t || (t == o.t && k > o.k); }
};

// Smaller known neighbor along one axis, +inf when none.
double axis_min(std::span<const double> time, const std::vector<ArrivalField::State>& state, std::size_t k, int idx,
                int n, std::size_t stride) {
  double best = std::numeric_limits<double>::infinity();
  if (idx > 0 && state[k - stride] == ArrivalField::State::kKnown) best = std::min(best, time[k - stride]);
  if (idx + 1 < n && state[k + stride] == ArrivalField::State::kKnown) best = std::min(best, time[k + stride]);
  return best;
}

// Upwind solution of (T-a)^2/dx^2 + (T-b)^2/dy^2 = 1/F^2. Every operation
// scales with 1/F, so doubling F halves the result exactly.
double upwind_update(double a, double b, double dx, double dy, double inv_f) {
  const bool has_a = std::isfinite(a), has_b = std::isfinite(b);
  if (!has_a && !has_b) return std::numeric_limits<double>::infinity();
  if (!has_b) return a + dx * inv_f;
  if (!has_a) return b + dy * inv_f;
  const double wa = 1.0 / (dx * dx), wb = 1.0 / (dy * dy);
  const double sum_w = wa + wb;
  const double lin = wa * a + wb * b;
  const double disc = lin * lin - sum_w * (wa * a * a + wb * b * b - inv_f * inv_f);
  if (disc >= 0.0) {
    const double t = (lin + std::sqrt(disc)) / sum_w;
    if (t >= std::max(a, b)) return t;
  }
  return std::min(a + dx * inv_f, b + dy * inv_f);
}

}  // namespace

ArrivalField fmm_solve(const Grid& grid, const InitialShape& shape, const std::function<double(Vec2)>& speed) {
  const LevelSetField phi0 = signed_distance(shape, grid);
  ArrivalField out(grid);
  std::vector<double> inv_speed(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double f = speed(grid.point(k));
    if (!(f > 0.0) || !std::isfinite(f)) throw InputError("fast marching needs a strictly positive speed");
    inv_speed[k] = 1.0 / f;
  }

  auto& time = out.time_;
  auto& state = out.state_;
  const int nx = grid.nx(), ny = grid.ny();
  std::priority_queue<HeapEntry, std::vector<HeapEntry>, std::greater<>> heap;

  // Seeds keep their exact value but are accepted through the heap like any
  // other node, so acceptance stays ordered.
  std::vector<std::uint8_t> seed(grid.size(), 0);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double p = phi0[k];
    const int i = grid.col(k), j = grid.row(k);
    bool adjacent = false;
    auto check = [&](std::size_t m) { adjacent = adjacent || ((phi0[m] < 0.0) != (p < 0.0)); };
    if (i > 0) check(k - 1);
    if (i + 1 < nx) check(k + 1);
    if (j > 0) check(k - nx);
    if (j + 1 < ny) check(k + nx);
    if (p < 0.0) {
      time[k] = p * inv_speed[k];
      state[k] = ArrivalField::State::kKnown;
    } else if (adjacent) {
      time[k] = p * inv_speed[k];
      state[k] = ArrivalField::State::kTrial;
      seed[k] = 1;
      heap.push({time[k], k});
      ++out.heap_pushes;
    }
  }

  auto relax = [&](std::size_t k) {
    if (state[k] == ArrivalField::State::kKnown || seed[k]) return;
    const int i = grid.col(k), j = grid.row(k);
    const double a = axis_min(time, state, k, i, nx, 1);
    const double b = axis_min(time, state, k, j, ny, static_cast<std::size_t>(nx));
    const double t = upwind_update(a, b, grid.dx(), grid.dy(), inv_speed[k]);
    if (t < time[k]) {
      time[k] = t;
      state[k] = ArrivalField::State::kTrial;
      heap.push({t, k});
      ++out.heap_pushes;
    }
  };

  while (!heap.empty()) {
    const HeapEntry top = heap.top();
    heap.pop();
    if (state[top.k] == ArrivalField::State::kKnown || top.t != time[top.k]) continue;
    state[top.k] = ArrivalField::State::kKnown;
    out.acceptance_order.push_back(top.t);
    ++out.accepted;
    const std::size_t k = top.k;
    const int i = grid.col(k), j = grid.row(k);
    if (i > 0) relax(k - 1);
    if (i + 1 < nx) relax(k + 1);
    if (j > 0) relax(k - nx);
    if (j + 1 < ny) relax(k + nx);
  }
  return out;
}

ArrivalField fmm_solve(const Grid& grid, const InitialShape& shape, const SpeedConfig& cfg) {
  if (!cfg.isotropic())
    throw AnisotropicHamiltonian("anisotropic Hamiltonian: fast marching needs a direction-independent speed");
  return fmm_solve(grid, shape, [&](Vec2 p) { return isotropic_speed(p, cfg); });
}

Front front_at_time(const ArrivalField& arrival, double t) {
  if (!(t >= 0.0)) throw InputError("front time must be >= 0");
  const auto times = arrival.signed_times();
  std::vector<double> shifted(times.size());
  for (std::size_t k = 0; k < times.size(); ++k) shifted[k] = times[k] - t;
  return extract_contour(arrival.grid(), shifted);
}

}  // namespace firefront
