#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "firefront/config.hpp"
#include "firefront/error.hpp"

namespace firefront {

struct UnknownPreset : ConfigError {
  using ConfigError::ConfigError;
};

/// The unit-speed expanding circle used for convergence and timing:
/// [0,3]^2, center (1.5, 1.5), r = 0.5, F = 1, T_f = 0.4, dt = 1e-4,
/// first-order Engquist-Osher on a 12/6 narrow band, `n` nodes per axis.
ScenarioConfig expanding_circle(int n = 301);

/// Fire scenarios: reference, merge-island, fuel-slow, fuel-fast, rotating,
/// counterflow-offset, counterflow-symmetric, hill.
std::vector<ScenarioConfig> scenario_presets();
std::vector<std::string> preset_names();

/// Looks a preset up by name; "counterflow" is accepted for the symmetric
/// counterflow case. Throws UnknownPreset.
ScenarioConfig preset(std::string_view name);

}  // namespace firefront
