#include "firefront/output.hpp"

#include <cstdio>
#include <ostream>

namespace firefront {

namespace {

std::string numbered(const char* stem, std::size_t index) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s_%04zu.txt", stem, index);
  return buf;
}

std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, v);
  return buf;
}

}  // namespace

std::string snapshot_name(std::size_t index) { return numbered("front", index); }
std::string field_name(std::size_t index) { return numbered("field", index); }

void write_snapshot_index(std::ostream& out, const RunOutput& result) {
  out << "# index t burned_area file\n";
  for (std::size_t k = 0; k < result.snapshots.size(); ++k) {
    const Snapshot& s = result.snapshots[k];
    out << k << ' ' << fmt("%.9g", s.t) << ' ' << fmt("%.9g", s.burned_area) << ' ' << snapshot_name(k) << '\n';
  }
}

void write_run_log(std::ostream& out, const ScenarioConfig& cfg, const RunOutput& r) {
  out << "# scenario " << cfg.name << " scheme " << scheme_name(cfg.scheme) << " grid " << cfg.nx << 'x' << cfg.ny
      << '\n';
  out << "# step t dt courant nodes rebuilt\n";
  for (const StepLogEntry& e : r.log) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%zu %.9g %.6g %.6f %zu %d\n", e.step, e.t, e.dt, e.courant, e.nodes,
                  e.rebuilt ? 1 : 0);
    out << buf;
  }
  out << "# status " << status_name(r.status) << '\n';
  out << "# t_end " << fmt("%.9g", r.t_end) << '\n';
  out << "# steps " << r.steps << "\n# reinits " << r.reinits << '\n';
  out << "# max_courant " << fmt("%.6f", r.max_courant) << '\n';
  out << "# mean_band_nodes " << fmt("%.1f", r.mean_band) << '\n';
  const PhaseTimes& t = r.times;
  out << "# seconds extension " << fmt("%.4f", t.extension) << " step " << fmt("%.4f", t.step) << " check "
      << fmt("%.4f", t.check) << " rebuild " << fmt("%.4f", t.rebuild) << " output " << fmt("%.4f", t.output)
      << " total " << fmt("%.4f", t.total) << '\n';
}

void print_summary(std::ostream& out, const ScenarioConfig& cfg, const RunOutput& r) {
  out << cfg.name << ": " << status_name(r.status) << " at t=" << fmt("%.6g", r.t_end) << ", " << r.steps
      << " steps, " << r.reinits << " reinitializations, " << r.snapshots.size() << " snapshots, max Courant "
      << fmt("%.3f", r.max_courant) << '\n';
  const PhaseTimes& t = r.times;
  out << "time: step " << fmt("%.3f", t.step) << " s, extension " << fmt("%.3f", t.extension) << " s, rebuild "
      << fmt("%.3f", t.rebuild) << " s, output " << fmt("%.3f", t.output) << " s, total " << fmt("%.3f", t.total)
      << " s\n";
}

}  // namespace firefront
