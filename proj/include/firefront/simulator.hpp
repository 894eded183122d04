#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "firefront/config.hpp"
#include "firefront/front.hpp"
#include "firefront/grid.hpp"
#include "firefront/schemes.hpp"

namespace firefront {

enum class RunStatus { kCompleted, kDomainExit, kExtinguished };
std::string_view status_name(RunStatus status);

struct Snapshot {
  double t = 0.0;
  Front front;
  double burned_area = 0.0;
  std::string path;  ///< empty when nothing was written
};

/// Wall-clock seconds per phase. `total` excludes nothing; `output` is the
/// snapshot extraction and file writing, so total - output is the compute.
struct PhaseTimes {
  double extension = 0.0;  ///< front extraction, speed sampling, extension
  double step = 0.0;       ///< scheme update
  double check = 0.0;      ///< inner-band and domain-boundary tests
  double rebuild = 0.0;    ///< band rebuild and reinitialization
  double output = 0.0;
  double total = 0.0;
};

struct StepLogEntry {
  std::size_t step = 0;
  double t = 0.0;  ///< time after the step
  double dt = 0.0;
  double courant = 0.0;
  std::size_t nodes = 0;
  bool rebuilt = false;
};

struct RunOutput {
  RunStatus status = RunStatus::kCompleted;
  double t_end = 0.0;
  std::size_t steps = 0;
  std::size_t reinits = 0;
  std::vector<Snapshot> snapshots;
  std::vector<StepLogEntry> log;
  StepReport last_step;
  double max_courant = 0.0;
  double mean_band = 0.0;
  PhaseTimes times;
  LevelSetField field;  ///< level set at t_end
};

struct RunHooks {
  /// Called after every reinitialization with the rebuilt band and the front
  /// the distance was measured to.
  std::function<void(const LevelSetField&, const NarrowBand&, const Front&, double t)> after_reinit;
  bool keep_log = true;
  bool keep_fronts = true;
};

/// Runs a scenario from the signed distance of its initial shape to t_final,
/// or until the front reaches the domain boundary or vanishes. Writes
/// snapshots, the run log and the snapshot index when cfg.output_dir is set.
/// Throws InputError for an invalid config and Error when a step is
/// rejected by the CFL check.
RunOutput run(const ScenarioConfig& cfg, const RunHooks& hooks = {});

}  // namespace firefront
