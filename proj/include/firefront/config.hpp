#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "firefront/front.hpp"
#include "firefront/grid.hpp"
#include "firefront/schemes.hpp"
#include "firefront/speed.hpp"

namespace firefront {

/// Every input of a run: geometry, speed law, numerics and output.
struct ScenarioConfig {
  std::string name = "custom";

  Vec2 domain_lo{0.0, 0.0};
  Vec2 domain_hi{3.0, 3.0};
  int nx = 301;
  int ny = 301;

  SchemeKind scheme = SchemeKind::kEngquistOsher1;
  double cfl_safety = 0.9;
  double dt = 0.0;  ///< fixed step; 0 selects the CFL step each iteration
  double t_final = 0.4;  ///< 0 outputs the initial front only
  BandWidths band;

  InitialShape shape = InitialShape::circle({1.5, 1.5}, 0.5);
  SpeedConfig speed{.kind = SpeedModelKind::kConstant};

  std::string output_dir;          ///< empty: nothing is written
  double snapshot_interval = 0.0;  ///< 0 selects t_final / 10
  bool dump_field = false;

  Grid grid() const;
  double resolved_snapshot_interval() const;
  /// Speed law with run-dependent defaults filled in (rotating wind sweeps
  /// over the whole run unless told otherwise).
  SpeedConfig resolved_speed() const;
  /// Throws InputError on invalid values or combinations.
  void validate() const;
};

/// Parses `[section]` / `key = value` text on top of `base`. Unknown sections
/// or keys and unparsable values raise ConfigError.
ScenarioConfig parse_config(std::istream& in, ScenarioConfig base = {});
ScenarioConfig load_config(const std::string& path, ScenarioConfig base = {});

/// Writes a config that parse_config reads back to the same scenario.
void write_config(std::ostream& out, const ScenarioConfig& cfg);

}  // namespace firefront
