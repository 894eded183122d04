#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <vector>

#include "firefront/geometry.hpp"
#include "firefront/schemes.hpp"

namespace firefront {

struct ScenarioConfig;

struct RadiusError {
  double e_spatial_1 = 0.0;
  double r_simulated = 0.0;
};

/// Mean vertex distance to `center` compared with the expected radius.
RadiusError radius_error(const Front& front, Vec2 center, double r_final);

struct TimeErrors {
  double e_time_2 = 0.0;
  double e_time_inf = 0.0;
};

/// RMS and max of |t_final - T_true| over the front vertices.
TimeErrors time_errors(const Front& front, double t_final, const std::function<double(Vec2)>& t_true);

struct ErrorReport {
  double dx = 0.0;
  int n = 0;
  double e_spatial_1 = 0.0;
  double e_time_2 = 0.0;
  double e_time_inf = 0.0;
  double r_simulated = 0.0;
  std::size_t vertices = 0;
  double max_courant = 0.0;
  double seconds = 0.0;
};

struct ConvergenceTable {
  std::vector<ErrorReport> rows;
  /// ratios[k] compares rows[k] with rows[k + 1]; {spatial, time_2, time_inf}.
  std::vector<std::array<double, 3>> ratios;
};

/// Expanding-circle study: for each spacing the scenario is rerun with
/// nodes = round(width / dx) + 1 and compared with the analytic circle
/// r(t) = r0 + F t. `base` must describe a single circle with constant speed.
ConvergenceTable convergence_study(const ScenarioConfig& base, const std::vector<double>& spacings);

struct BenchRow {
  int n = 0;
  double dx = 0.0;
  double seconds = 0.0;
  double step_seconds = 0.0;
  double rebuild_seconds = 0.0;
  std::size_t steps = 0;
  std::size_t reinits = 0;
  std::size_t mean_band = 0;
};

/// Wall-clock timings, output excluded, band widths from `base`.
std::vector<BenchRow> bench(const ScenarioConfig& base, const std::vector<int>& node_counts);

void print_convergence(std::ostream& out, const ConvergenceTable& table);
void write_convergence_records(std::ostream& out, const ConvergenceTable& table);
void print_bench(std::ostream& out, const std::vector<BenchRow>& rows);
void write_bench_records(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace firefront
