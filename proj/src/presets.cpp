#include "firefront/presets.hpp"

#include <numbers>

namespace firefront {

ScenarioConfig expanding_circle(int n) {
  ScenarioConfig c;
  c.name = "expanding-circle";
  c.nx = c.ny = n;
  c.scheme = SchemeKind::kEngquistOsher1;
  c.dt = 1e-4;
  c.t_final = 0.4;
  c.shape = InitialShape::circle({1.5, 1.5}, 0.5);
  c.speed = SpeedConfig{};
  c.speed.kind = SpeedModelKind::kConstant;
  c.speed.constant_speed = 1.0;
  return c;
}

namespace {

// Model and numerics follow the first parameter table (n = 1.5, U = 100,
// a = 0.5, eps0 = 0.2, alpha = 0.5, dx = dy = 3e-3, dt = 1e-4, T_f = 0.1);
// geometry follows the second one (domain [0,3]^2, circle at (1.5, 1.0) with
// r = 0.5). Its dt = 5e-5 and "F = 1.0" rows belong to the unit-speed test
// case and are not used here.
ScenarioConfig fire_base(const char* name) {
  ScenarioConfig c;
  c.name = name;
  c.nx = c.ny = 1001;
  c.scheme = SchemeKind::kLocalLaxFriedrichs1;
  c.dt = 1e-4;
  c.t_final = 0.1;
  c.shape = InitialShape::circle({1.5, 1.0}, 0.5);
  c.speed = SpeedConfig{};
  c.speed.kind = SpeedModelKind::kSimplified;
  c.speed.params = FireModelParams{.eps0 = 0.2, .a = 0.5, .n = 1.5, .alpha_rear = 0.5};
  c.speed.wind = WindField{.kind = WindKind::kConstant, .speed = 100.0, .direction = 0.0};
  return c;
}

ScenarioConfig fuel(const char* name, double a_far, double t_final) {
  ScenarioConfig c = fire_base(name);
  c.dt = 2.5e-5;
  c.t_final = t_final;
  c.speed.fuel = FuelField{.enabled = true, .a_near = 0.5, .a_far = a_far, .x_near = 1.7, .x_far = 1.8};
  return c;
}

// Two mirror-image circles on either side of the converging stagnation
// line x = 1.5; `y` places them on the line of the diverging component or
// off it. Circle geometry is our choice.
ScenarioConfig counterflow(const char* name, double y) {
  ScenarioConfig c = fire_base(name);
  c.dt = 0.0;
  c.shape = InitialShape{};
  c.shape.circles = {{{1.25, y}, 0.2}, {{1.75, y}, 0.2}};
  c.speed.wind = WindField{.kind = WindKind::kCounterflow, .strength = 100.0, .stagnation = {1.5, 1.5}};
  return c;
}

}  // namespace

std::vector<ScenarioConfig> scenario_presets() {
  std::vector<ScenarioConfig> out;
  out.push_back(fire_base("reference"));

  // Circle positions and the island are our choice: the fronts merge and the
  // island burns out well before T_f.
  ScenarioConfig merge = fire_base("merge-island");
  merge.shape = InitialShape{};
  merge.shape.circles = {{{1.0, 1.0}, 0.3}, {{1.9, 1.2}, 0.3}};
  merge.shape.islands = {InitialShape::square({1.9, 1.2}, 0.2)};
  out.push_back(merge);

  out.push_back(fuel("fuel-slow", 0.25, 1.5));
  out.push_back(fuel("fuel-fast", 1.0, 0.1));

  // Wind turns from west-to-east to south-to-north over the run.
  ScenarioConfig rot = fire_base("rotating");
  rot.speed.wind.kind = WindKind::kRotating;
  rot.speed.wind.direction_end = std::numbers::pi / 2.0;
  out.push_back(rot);

  out.push_back(counterflow("counterflow-offset", 1.72));
  out.push_back(counterflow("counterflow-symmetric", 1.5));

  // Gaussian hill of height 0.1 and width 0.1 at (1.75, 1.5); the fire starts
  // upwind of it. Both are our choice.
  ScenarioConfig hill = fire_base("hill");
  hill.dt = 0.0;
  hill.shape = InitialShape::circle({1.0, 1.5}, 0.3);
  hill.speed.terrain = TerrainField{.kind = TerrainKind::kHill, .center = {1.75, 1.5}, .height = 0.1, .width = 0.1};
  out.push_back(hill);
  return out;
}

std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  for (const auto& p : scenario_presets()) names.push_back(p.name);
  return names;
}

ScenarioConfig preset(std::string_view name) {
  if (name == "counterflow") name = "counterflow-symmetric";
  for (auto& p : scenario_presets())
    if (p.name == name) return p;
  std::string known;
  for (const auto& n : preset_names()) known += (known.empty() ? "" : ", ") + n;
  throw UnknownPreset("unknown preset '" + std::string(name) + "' (known: " + known + ")");
}

}  // namespace firefront
