#include "firefront/metrics.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "firefront/config.hpp"
#include "firefront/error.hpp"
#include "firefront/simulator.hpp"

namespace firefront {

RadiusError radius_error(const Front& front, Vec2 center, double r_final) {
  if (front.vertex_count() == 0) throw InputError("radius error of an empty front");
  double sum = 0.0;
  for (const Curve& c : front.curves)
    for (const FrontVertex& v : c.vertices) sum += distance(v.position, center);
  RadiusError e;
  e.r_simulated = sum / static_cast<double>(front.vertex_count());
  e.e_spatial_1 = std::abs(e.r_simulated - r_final);
  return e;
}

TimeErrors time_errors(const Front& front, double t_final, const std::function<double(Vec2)>& t_true) {
  if (front.vertex_count() == 0) throw InputError("time errors of an empty front");
  double sq = 0.0, mx = 0.0;
  for (const Curve& c : front.curves) {
    for (const FrontVertex& v : c.vertices) {
      const double d = std::abs(t_final - t_true(v.position));
      sq += d * d;
      mx = std::max(mx, d);
    }
  }
  return {std::sqrt(sq / static_cast<double>(front.vertex_count())), mx};
}

namespace {

int nodes_for(double width, double dx) { return static_cast<int>(std::lround(width / dx)) + 1; }

void check_circle_case(const ScenarioConfig& base) {
  if (base.shape.circles.size() != 1 || !base.shape.polygons.empty() || !base.shape.islands.empty())
    throw InputError("the convergence study needs a single initial circle");
  if (base.speed.kind != SpeedModelKind::kConstant || !(base.speed.constant_speed > 0.0) ||
      base.speed.terrain.kind != TerrainKind::kFlat)
    throw InputError("the convergence study needs a constant positive speed on flat terrain");
}

}  // namespace

ConvergenceTable convergence_study(const ScenarioConfig& base, const std::vector<double>& spacings) {
  check_circle_case(base);
  const Circle circle = base.shape.circles.front();
  const double f = base.speed.constant_speed;
  const double r_final = circle.radius + f * base.t_final;
  auto t_true = [&](Vec2 p) { return (distance(p, circle.center) - circle.radius) / f; };

  ConvergenceTable table;
  for (double dx : spacings) {
    if (!(dx > 0.0)) throw InputError("grid spacing must be positive");
    ScenarioConfig cfg = base;
    cfg.nx = nodes_for(base.domain_hi.x - base.domain_lo.x, dx);
    cfg.ny = nodes_for(base.domain_hi.y - base.domain_lo.y, dx);
    cfg.output_dir.clear();
    const auto start = std::chrono::steady_clock::now();
    const RunOutput result = run(cfg, RunHooks{.keep_log = false, .keep_fronts = true});
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (result.status != RunStatus::kCompleted)
      throw Error("convergence run at dx=" + std::to_string(dx) + " ended early: " +
                  std::string(status_name(result.status)));
    const Front& final_front = result.snapshots.back().front;
    const RadiusError re = radius_error(final_front, circle.center, r_final);
    const TimeErrors te = time_errors(final_front, result.t_end, t_true);
    ErrorReport row;
    row.dx = cfg.grid().dx();
    row.n = cfg.nx;
    row.e_spatial_1 = re.e_spatial_1;
    row.e_time_2 = te.e_time_2;
    row.e_time_inf = te.e_time_inf;
    row.r_simulated = re.r_simulated;
    row.vertices = final_front.vertex_count();
    row.max_courant = result.max_courant;
    row.seconds = secs;
    table.rows.push_back(row);
  }
  for (std::size_t k = 0; k + 1 < table.rows.size(); ++k) {
    const ErrorReport& a = table.rows[k];
    const ErrorReport& b = table.rows[k + 1];
    table.ratios.push_back({a.e_spatial_1 / b.e_spatial_1, a.e_time_2 / b.e_time_2, a.e_time_inf / b.e_time_inf});
  }
  return table;
}

std::vector<BenchRow> bench(const ScenarioConfig& base, const std::vector<int>& node_counts) {
  std::vector<BenchRow> rows;
  for (int n : node_counts) {
    ScenarioConfig cfg = base;
    cfg.nx = cfg.ny = n;
    cfg.output_dir.clear();
    const RunOutput result = run(cfg, RunHooks{.keep_log = false, .keep_fronts = false});
    BenchRow row;
    row.n = n;
    row.dx = cfg.grid().dx();
    row.seconds = result.times.total - result.times.output;
    row.step_seconds = result.times.step;
    row.rebuild_seconds = result.times.rebuild;
    row.steps = result.steps;
    row.reinits = result.reinits;
    row.mean_band = static_cast<std::size_t>(std::lround(result.mean_band));
    rows.push_back(row);
  }
  return rows;
}

namespace {

void line(std::ostream& out, const char* format, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, args...);
  out << buf;
}

}  // namespace

void print_convergence(std::ostream& out, const ConvergenceTable& table) {
  line(out, "%-12s %7s %14s %14s %14s %9s %8s\n", "dx", "N", "e_spatial_1", "e_time_2", "e_time_inf", "vertices",
       "time(s)");
  line(out, "%-12s %7s %14s %14s %14s\n", "", "", "(x1e3)", "(x1e3)", "(x1e3)");
  for (const ErrorReport& r : table.rows)
    line(out, "%-12.6g %7d %14.3f %14.3f %14.3f %9zu %8.2f\n", r.dx, r.n, r.e_spatial_1 * 1e3, r.e_time_2 * 1e3,
         r.e_time_inf * 1e3, r.vertices, r.seconds);
  if (table.ratios.empty()) return;
  out << "ratios\n";
  for (std::size_t k = 0; k < table.ratios.size(); ++k)
    line(out, "%-12s %7s %14.2f %14.2f %14.2f\n", (std::to_string(k) + "/" + std::to_string(k + 1)).c_str(), "",
         table.ratios[k][0], table.ratios[k][1], table.ratios[k][2]);
}

void write_convergence_records(std::ostream& out, const ConvergenceTable& table) {
  for (std::size_t k = 0; k < table.rows.size(); ++k) {
    const ErrorReport& r = table.rows[k];
    line(out, "[row %zu]\ndx = %.17g\nn = %d\ne_spatial_1 = %.17g\ne_time_2 = %.17g\ne_time_inf = %.17g\n", k, r.dx,
         r.n, r.e_spatial_1, r.e_time_2, r.e_time_inf);
    line(out, "r_simulated = %.17g\nvertices = %zu\nmax_courant = %.17g\nseconds = %.6f\n", r.r_simulated,
         r.vertices, r.max_courant, r.seconds);
    if (k < table.ratios.size())
      line(out, "ratio_spatial_1 = %.17g\nratio_time_2 = %.17g\nratio_time_inf = %.17g\n", table.ratios[k][0],
           table.ratios[k][1], table.ratios[k][2]);
    out << '\n';
  }
}

void print_bench(std::ostream& out, const std::vector<BenchRow>& rows) {
  line(out, "%-12s %6s %10s %10s %10s %7s %8s %10s\n", "dx", "N", "time(s)", "step(s)", "rebuild(s)", "steps",
       "reinits", "band");
  for (const BenchRow& r : rows)
    line(out, "%-12.6g %6d %10.3f %10.3f %10.3f %7zu %8zu %10zu\n", r.dx, r.n, r.seconds, r.step_seconds,
         r.rebuild_seconds, r.steps, r.reinits, r.mean_band);
}

void write_bench_records(std::ostream& out, const std::vector<BenchRow>& rows) {
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const BenchRow& r = rows[k];
    line(out, "[row %zu]\ndx = %.17g\nn = %d\nseconds = %.6f\nstep_seconds = %.6f\nrebuild_seconds = %.6f\n", k, r.dx,
         r.n, r.seconds, r.step_seconds, r.rebuild_seconds);
    line(out, "steps = %zu\nreinits = %zu\nmean_band = %zu\n\n", r.steps, r.reinits, r.mean_band);
  }
}

}  // namespace firefront
