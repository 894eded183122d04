#include "firefront/simulator.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>

#include "firefront/error.hpp"
#include "firefront/output.hpp"
#include "firefront/speed.hpp"

namespace firefront {

std::string_view status_name(RunStatus status) {
  switch (status) {
    case RunStatus::kCompleted: return "completed";
    case RunStatus::kDomainExit: return "domain-exit";
    case RunStatus::kExtinguished: return "extinguished";
  }
  return "unknown";
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct BandCheck {
  bool escaped = false;
  bool boundary = false;
  bool crossed = false;  ///< any sign change at all
};

// Looks at every grid edge leaving a band node through +x or +y. A sign
// change whose endpoint is not inner means the front left the inner tube; a
// sign change touching the outermost node layer means it reached the domain
// boundary.
BandCheck check_band(const LevelSetField& field, const NarrowBand& band) {
  const Grid& g = field.grid();
  const auto v = field.values();
  const auto active = band.active();
  const std::size_t nx = static_cast<std::size_t>(g.nx());
  int escaped = 0, boundary = 0, crossed = 0;
#pragma omp parallel for reduction(| : escaped, boundary, crossed) schedule(static)
  for (std::ptrdiff_t n = 0; n < static_cast<std::ptrdiff_t>(active.size()); ++n) {
    const std::size_t k = active[n];
    const int i = g.col(k), j = g.row(k);
    const bool neg = v[k] < 0.0;
    auto edge = [&](std::size_t m) {
      if ((v[m] < 0.0) == neg) return;
      crossed = 1;
      if (!band.is_inner(k) || !band.is_inner(m)) escaped = 1;
      if (g.on_boundary(k) || g.on_boundary(m)) boundary = 1;
    };
    if (i + 1 < g.nx()) edge(k + 1);
    if (j + 1 < g.ny()) edge(k + nx);
    // Band nodes on the low sides own edges whose other end may be outside.
    if (i > 0 && !band.is_active(k - 1)) edge(k - 1);
    if (j > 0 && !band.is_active(k - nx)) edge(k - nx);
  }
  return {escaped != 0, boundary != 0, crossed != 0};
}

class Writer {
 public:
  explicit Writer(const ScenarioConfig& cfg) : cfg_(cfg) {
    if (cfg.output_dir.empty()) return;
    dir_ = cfg.output_dir;
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) throw Error("cannot create output directory " + dir_.string() + ": " + ec.message());
    std::ofstream cfg_out(dir_ / "config.ini");
    if (!cfg_out) throw Error("cannot write to output directory " + dir_.string());
    write_config(cfg_out, cfg);
  }

  bool enabled() const { return !dir_.empty(); }

  std::string snapshot(std::size_t index, const Front& front, double t, const LevelSetField& field) {
    if (!enabled()) return {};
    const auto path = dir_ / snapshot_name(index);
    write_front(path.string(), front, t);
    if (cfg_.dump_field) write_field((dir_ / field_name(index)).string(), field.grid(), field.values());
    return path.string();
  }

  void finish(const RunOutput& result) {
    if (!enabled()) return;
    std::ofstream index(dir_ / "snapshots.txt");
    write_snapshot_index(index, result);
    std::ofstream log(dir_ / "run.log");
    write_run_log(log, cfg_, result);
    if (!index || !log) throw Error("failed writing run output to " + dir_.string());
  }

 private:
  const ScenarioConfig& cfg_;
  std::filesystem::path dir_;
};

}  // namespace

RunOutput run(const ScenarioConfig& cfg, const RunHooks& hooks) {
  cfg.validate();
  const auto run_start = Clock::now();
  const Grid grid = cfg.grid();
  const SpeedConfig speed = cfg.resolved_speed();
  const bool full = requires_full_matrix(cfg.scheme);
  const bool uniform = speed.kind == SpeedModelKind::kConstant && speed.terrain.kind == TerrainKind::kFlat;
  const double bound = hamiltonian_bound(speed, grid.origin(), grid.upper());
  const double interval = cfg.resolved_snapshot_interval();

  RunOutput out;
  Writer writer(cfg);
  LevelSetField field = signed_distance(cfg.shape, grid);

  NarrowBand band;
  VelocityExtension ext;
  if (full) {
    band = NarrowBand::full(grid);
  } else {
    band = rebuild_band(field, extract_front(field), cfg.band);
  }
  if (uniform) ext = uniform_extension(band, speed.constant_speed);

  auto record = [&](double t, std::optional<Front> front) {
    const auto start = Clock::now();
    Snapshot snap;
    snap.t = t;
    snap.front = front ? std::move(*front) : extract_front(field, band);
    snap.burned_area = burned_area(snap.front);
    snap.path = writer.snapshot(out.snapshots.size(), snap.front, t, field);
    if (!hooks.keep_fronts) snap.front = Front{};
    out.snapshots.push_back(std::move(snap));
    out.times.output += seconds_since(start);
  };

  record(0.0, std::nullopt);

  double t = 0.0;
  std::size_t next_snapshot = 1;
  double band_total = 0.0;
  while (cfg.t_final > 0.0) {
    const double t_next = std::min(next_snapshot * interval, cfg.t_final);
    double dt = cfg.dt > 0.0 ? cfg.dt : cfl_dt(bound, grid.dx(), grid.dy(), cfg.cfl_safety, interval);
    bool snap_due = false;
    if (t_next - t <= dt * (1.0 + 1e-6)) {
      dt = t_next - t;
      snap_due = true;
    }

    auto phase = Clock::now();
    std::optional<Front> front;
    if (!uniform) {
      front = extract_front(field, band);
      if (front->empty()) {
        out.status = RunStatus::kExtinguished;
        break;
      }
      sample_front_speeds(*front, t, speed);
      ext = extend_velocity(*front, band, grid);
    }
    out.times.extension += seconds_since(phase);

    phase = Clock::now();
    StepReport report;
    switch (cfg.scheme) {
      case SchemeKind::kEngquistOsher1: report = eo1_step(field, band, ext.speed, dt); break;
      case SchemeKind::kLaxFriedrichs1:
        report = lf1_step(field, band, ext.speed, ext.speed_slope, dt, LfMode::kGlobal, bound);
        break;
      case SchemeKind::kLocalLaxFriedrichs1:
        report = lf1_step(field, band, ext.speed, ext.speed_slope, dt, LfMode::kLocal, 0.0);
        break;
      case SchemeKind::kEngquistOsherEno2: report = eno2_step(field, band, ext.speed, dt); break;
    }
    out.times.step += seconds_since(phase);
    if (!report.accepted)
      throw Error("step rejected at t=" + std::to_string(t) + ": Courant number " + std::to_string(report.courant) +
                  " exceeds 1");
    t = snap_due ? t_next : t + dt;
    ++out.steps;
    out.last_step = report;
    out.max_courant = std::max(out.max_courant, report.courant);
    band_total += static_cast<double>(band.size());

    phase = Clock::now();
    const BandCheck check = check_band(field, band);
    out.times.check += seconds_since(phase);

    bool rebuilt = false;
    front.reset();
    if (check.boundary) {
      out.status = RunStatus::kDomainExit;
    } else if (!check.crossed) {
      out.status = RunStatus::kExtinguished;
    } else if (check.escaped && !full) {
      phase = Clock::now();
      front = extract_front(field, band);
      if (front->empty()) {
        out.status = RunStatus::kExtinguished;
      } else {
        band = rebuild_band(field, *front, cfg.band);
        reinitialize(field, *front, band);
        field.sync_buffer();
        if (uniform) ext = uniform_extension(band, speed.constant_speed);
        ++out.reinits;
        rebuilt = true;
      }
      out.times.rebuild += seconds_since(phase);
      if (rebuilt && hooks.after_reinit) hooks.after_reinit(field, band, *front, t);
    }
    if (hooks.keep_log) out.log.push_back({out.steps, t, dt, report.courant, report.nodes, rebuilt});

    if (out.status != RunStatus::kCompleted) break;
    if (snap_due) {
      record(t, std::move(front));
      ++next_snapshot;
      if (t_next >= cfg.t_final) break;
    }
  }
  if (out.status != RunStatus::kCompleted && (out.snapshots.empty() || out.snapshots.back().t != t))
    record(t, std::nullopt);

  out.t_end = t;
  out.mean_band = out.steps > 0 ? band_total / static_cast<double>(out.steps) : static_cast<double>(band.size());
  out.times.total = seconds_since(run_start);
  const auto finish = Clock::now();
  writer.finish(out);
  out.times.output += seconds_since(finish);
  out.field = std::move(field);
  return out;
}

}  // namespace firefront
