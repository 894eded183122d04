#include "firefront/schemes.hpp"

#include <algorithm>
#include <cmath>

#include "firefront/error.hpp"

namespace firefront {

std::string_view scheme_name(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::kEngquistOsher1: return "engquist_osher_1";
    case SchemeKind::kLaxFriedrichs1: return "lax_friedrichs_1";
    case SchemeKind::kLocalLaxFriedrichs1: return "local_lax_friedrichs_1";
    case SchemeKind::kEngquistOsherEno2: return "engquist_osher_eno_2";
  }
  return "unknown";
}

SchemeKind parse_scheme(std::string_view name) {
  if (name == "engquist_osher_1" || name == "eo1") return SchemeKind::kEngquistOsher1;
  if (name == "lax_friedrichs_1" || name == "lf1") return SchemeKind::kLaxFriedrichs1;
  if (name == "local_lax_friedrichs_1" || name == "llf1") return SchemeKind::kLocalLaxFriedrichs1;
  if (name == "engquist_osher_eno_2" || name == "eno2") return SchemeKind::kEngquistOsherEno2;
  throw ConfigError("unknown scheme: " + std::string(name));
}

namespace {

constexpr double kCourantLimit = 1.0 + 1e-12;

double max_abs(std::span<const double> xs) {
  double m = 0.0;
#pragma omp parallel for reduction(max : m) schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(xs.size()); ++i) m = std::max(m, std::abs(xs[i]));
  return m;
}

double min_spacing(const Grid& g) { return std::min(g.dx(), g.dy()); }

void check_sizes(const NarrowBand& band, std::span<const double> speed) {
  if (speed.size() != band.size()) throw ContractViolation("speed array does not match the band");
}

// Osher-Sethian upwind gradient magnitude for the sign of the speed.
double upwind_norm(const OneSidedDiffs& d, double f) {
  if (f > 0.0) {
    const double a = std::max(d.minus_x, 0.0), b = std::min(d.plus_x, 0.0);
    const double c = std::max(d.minus_y, 0.0), e = std::min(d.plus_y, 0.0);
    return std::sqrt(a * a + b * b + c * c + e * e);
  }
  const double a = std::min(d.minus_x, 0.0), b = std::max(d.plus_x, 0.0);
  const double c = std::min(d.minus_y, 0.0), e = std::max(d.plus_y, 0.0);
  return std::sqrt(a * a + b * b + c * c + e * e);
}

template <class Diffs>
StepReport upwind_step(LevelSetField& field, const NarrowBand& band, std::span<const double> speed, double dt,
                       Diffs&& diffs) {
  check_sizes(band, speed);
  const Grid& g = field.grid();
  StepReport report;
  report.dt = dt;
  report.nodes = band.size();
  report.max_hprime = max_abs(speed);
  report.courant = report.max_hprime * dt / min_spacing(g);
  if (report.courant > kCourantLimit) {
    report.accepted = false;
    return report;
  }
  const auto active = band.active();
  const auto cur = field.values();
  auto next = field.buffer();
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t n = 0; n < static_cast<std::ptrdiff_t>(active.size()); ++n) {
    const std::size_t k = active[n];
    const double f = speed[n];
    if (f == 0.0) {
      next[k] = cur[k];
      continue;
    }
    const OneSidedDiffs d = diffs(k);
    next[k] = cur[k] - dt * f * upwind_norm(d, f);
  }
  field.swap_buffers();
  return report;
}

}  // namespace

StepReport eo1_step(LevelSetField& field, const NarrowBand& band, std::span<const double> speed, double dt) {
  return upwind_step(field, band, speed, dt, [&](std::size_t k) { return diff_ops(field, k); });
}

namespace {

// Sup of |x| / sqrt(x^2 + y^2) over the box x in [x0,x1], y in [y0,y1] is
// reached at the largest |x| and the smallest |y|.
double ratio_bound(double x0, double x1, double y0, double y1) {
  const double xmax = std::max(std::abs(x0), std::abs(x1));
  const double ymin = (y0 <= 0.0 && y1 >= 0.0) || (y1 <= 0.0 && y0 >= 0.0) ? 0.0 : std::min(std::abs(y0), std::abs(y1));
  if (xmax == 0.0) return 0.0;
  return xmax / std::sqrt(xmax * xmax + ymin * ymin);
}

}  // namespace

StepReport lf1_step(LevelSetField& field, const NarrowBand& band, std::span<const double> speed,
                    std::span<const double> speed_slope, double dt, LfMode mode, double global_bound) {
  check_sizes(band, speed);
  if (mode == LfMode::kLocal && speed_slope.size() != band.size())
    throw ContractViolation("speed slope array does not match the band");
  const Grid& g = field.grid();
  const auto active = band.active();

  StepReport report;
  report.dt = dt;
  report.nodes = band.size();

  std::vector<double> theta_x(active.size()), theta_y(active.size());
  double hmax = 0.0;
  if (mode == LfMode::kGlobal) {
    double bound = global_bound;
    if (!(bound > 0.0)) bound = max_abs(speed) + (speed_slope.empty() ? 0.0 : max_abs(speed_slope));
    std::fill(theta_x.begin(), theta_x.end(), bound);
    std::fill(theta_y.begin(), theta_y.end(), bound);
    hmax = active.empty() ? 0.0 : bound;
  } else {
#pragma omp parallel for reduction(max : hmax) schedule(static)
    for (std::ptrdiff_t n = 0; n < static_cast<std::ptrdiff_t>(active.size()); ++n) {
      const OneSidedDiffs d = diff_ops(field, active[n]);
      const double f = std::abs(speed[n]);
      const double s = std::abs(speed_slope[n]);
      // dH/dp = (F p - F' q) / |grad|, dH/dq = (F q + F' p) / |grad|
      theta_x[n] = f * ratio_bound(d.minus_x, d.plus_x, d.minus_y, d.plus_y) +
                   s * ratio_bound(d.minus_y, d.plus_y, d.minus_x, d.plus_x);
      theta_y[n] = f * ratio_bound(d.minus_y, d.plus_y, d.minus_x, d.plus_x) +
                   s * ratio_bound(d.minus_x, d.plus_x, d.minus_y, d.plus_y);
      hmax = std::max({hmax, theta_x[n], theta_y[n]});
    }
  }
  report.max_hprime = hmax;
  report.courant = hmax * dt / min_spacing(g);
  if (report.courant > kCourantLimit) {
    report.accepted = false;
    return report;
  }

  const auto cur = field.values();
  auto next = field.buffer();
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t n = 0; n < static_cast<std::ptrdiff_t>(active.size()); ++n) {
    const std::size_t k = active[n];
    const OneSidedDiffs d = diff_ops(field, k);
    const double p = 0.5 * (d.minus_x + d.plus_x);
    const double q = 0.5 * (d.minus_y + d.plus_y);
    const double h = speed[n] * std::sqrt(p * p + q * q) - theta_x[n] * 0.5 * (d.plus_x - d.minus_x) -
                     theta_y[n] * 0.5 * (d.plus_y - d.minus_y);
    next[k] = cur[k] - dt * h;
  }
  field.swap_buffers();
  return report;
}

namespace {

double eno_pick(double a, double b) { return std::abs(a) <= std::abs(b) ? a : b; }

// Second-order ENO one-sided differences; first order where the wider
// stencil leaves the grid.
OneSidedDiffs eno2_diffs(const LevelSetField& field, std::size_t k) {
  OneSidedDiffs d = diff_ops(field, k);
  const Grid& g = field.grid();
  const auto v = field.values();
  const int i = g.col(k), j = g.row(k);

  auto second = [&](std::size_t c, std::size_t stride, double h2) {
    return (v[c + stride] - 2.0 * v[c] + v[c - stride]) / h2;
  };
  const double dx2 = g.dx() * g.dx(), dy2 = g.dy() * g.dy();
  const std::size_t sx = 1, sy = static_cast<std::size_t>(g.nx());

  if (i >= 1 && i + 1 < g.nx()) {
    const double c0 = second(k, sx, dx2);
    if (i >= 2) d.minus_x += 0.5 * g.dx() * eno_pick(second(k - sx, sx, dx2), c0);
    if (i + 2 < g.nx()) d.plus_x -= 0.5 * g.dx() * eno_pick(c0, second(k + sx, sx, dx2));
  }
  if (j >= 1 && j + 1 < g.ny()) {
    const double c0 = second(k, sy, dy2);
    if (j >= 2) d.minus_y += 0.5 * g.dy() * eno_pick(second(k - sy, sy, dy2), c0);
    if (j + 2 < g.ny()) d.plus_y -= 0.5 * g.dy() * eno_pick(c0, second(k + sy, sy, dy2));
  }
  return d;
}

}  // namespace

StepReport eno2_step(LevelSetField& field, const NarrowBand& band, std::span<const double> speed, double dt) {
  if (!band.is_full()) throw ConfigError("the ENO scheme requires full-matrix mode (no narrow band)");
  return upwind_step(field, band, speed, dt, [&](std::size_t k) { return eno2_diffs(field, k); });
}

double cfl_dt(double max_hprime, double dx, double dy, double safety, double stationary_dt) {
  if (!(safety > 0.0 && safety <= 1.0)) throw InputError("CFL safety factor must lie in (0, 1]");
  if (max_hprime == 0.0) return stationary_dt;
  if (!(max_hprime > 0.0)) throw InputError("max |H'| must be positive");
  return safety * std::min(dx, dy) / max_hprime;
}

}  // namespace firefront
