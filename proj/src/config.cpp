#include "firefront/config.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "firefront/error.hpp"

namespace firefront {

Grid ScenarioConfig::grid() const {
  if (nx < 2 || ny < 2) throw InputError("the grid needs at least 2 nodes per axis");
  if (!(domain_hi.x > domain_lo.x) || !(domain_hi.y > domain_lo.y)) throw InputError("domain bounds are empty");
  return Grid(domain_lo, (domain_hi.x - domain_lo.x) / (nx - 1), (domain_hi.y - domain_lo.y) / (ny - 1), nx, ny);
}

double ScenarioConfig::resolved_snapshot_interval() const {
  return snapshot_interval > 0.0 ? snapshot_interval : t_final / 10.0;
}

SpeedConfig ScenarioConfig::resolved_speed() const {
  SpeedConfig s = speed;
  if (s.wind.kind == WindKind::kRotating && !(s.wind.duration > 0.0)) s.wind.duration = t_final;
  return s;
}

void ScenarioConfig::validate() const {
  const Grid g = grid();
  if (!(t_final >= 0.0) || !std::isfinite(t_final)) throw InputError("t_final must be >= 0");
  if (!(dt >= 0.0) || !std::isfinite(dt)) throw InputError("dt must be >= 0 (0 selects the CFL step)");
  if (!(cfl_safety > 0.0 && cfl_safety <= 1.0)) throw InputError("cfl_safety must lie in (0, 1]");
  if (snapshot_interval < 0.0) throw InputError("snapshot_interval must be >= 0");
  if (t_final > 0.0 && snapshot_interval > t_final) throw InputError("snapshot_interval exceeds t_final");
  if (band.inner < 1 || band.inner >= band.outer) throw InputError("band widths need 1 <= inner < outer");
  shape.validate(g);
  speed.validate();
  if (requires_full_matrix(scheme) && !speed.isotropic())
    throw InputError("the ENO scheme supports direction-independent speeds only");
}

namespace {

namespace pt = boost::property_tree;

double to_double(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ConfigError("'" + key + "' is not a number: " + text);
  }
  if (text.find_first_not_of(" \t", used) != std::string::npos)
    throw ConfigError("'" + key + "' is not a number: " + text);
  return v;
}

int to_int(const std::string& key, const std::string& text) {
  const double v = to_double(key, text);
  if (v != std::floor(v) || std::abs(v) > 1e9) throw ConfigError("'" + key + "' is not an integer: " + text);
  return static_cast<int>(v);
}

bool to_bool(const std::string& key, const std::string& text) {
  if (text == "true" || text == "yes" || text == "1" || text == "on") return true;
  if (text == "false" || text == "no" || text == "0" || text == "off") return false;
  throw ConfigError("'" + key + "' is not a boolean: " + text);
}

// "a b c; d e f" -> {{a, b, c}, {d, e, f}}
std::vector<std::vector<double>> to_groups(const std::string& key, const std::string& text) {
  std::vector<std::vector<double>> out;
  std::stringstream groups(text);
  std::string group;
  while (std::getline(groups, group, ';')) {
    std::istringstream in(group);
    std::vector<double> nums;
    std::string tok;
    while (in >> tok) nums.push_back(to_double(key, tok));
    if (!nums.empty()) out.push_back(std::move(nums));
  }
  return out;
}

std::vector<Polygon> to_polygons(const std::string& key, const std::string& text) {
  std::vector<Polygon> out;
  for (const auto& g : to_groups(key, text)) {
    if (g.size() < 6 || g.size() % 2 != 0) throw ConfigError("'" + key + "' needs x y pairs, at least 3 points");
    Polygon p;
    for (std::size_t i = 0; i < g.size(); i += 2) p.points.push_back({g[i], g[i + 1]});
    out.push_back(std::move(p));
  }
  return out;
}

SpeedModelKind to_model(const std::string& text) {
  if (text == "constant") return SpeedModelKind::kConstant;
  if (text == "piecewise") return SpeedModelKind::kPiecewiseConstant;
  if (text == "full") return SpeedModelKind::kFull;
  if (text == "simplified") return SpeedModelKind::kSimplified;
  throw ConfigError("unknown model kind: " + text);
}

WindKind to_wind(const std::string& text) {
  if (text == "constant") return WindKind::kConstant;
  if (text == "rotating") return WindKind::kRotating;
  if (text == "counterflow") return WindKind::kCounterflow;
  throw ConfigError("unknown wind kind: " + text);
}

TerrainKind to_terrain(const std::string& text) {
  if (text == "flat") return TerrainKind::kFlat;
  if (text == "hill") return TerrainKind::kHill;
  throw ConfigError("unknown terrain kind: " + text);
}

using Setter = std::function<void(const std::string& key, const std::string& value)>;
using Table = std::map<std::string, std::map<std::string, Setter>>;

Setter number(double& target) {
  return [&target](const std::string& k, const std::string& v) { target = to_double(k, v); };
}

Table make_table(ScenarioConfig& c) {
  FireModelParams& p = c.speed.params;
  WindField& w = c.speed.wind;
  FuelField& f = c.speed.fuel;
  TerrainField& t = c.speed.terrain;
  Table tab;
  tab["domain"] = {
      {"x_min", number(c.domain_lo.x)},
      {"y_min", number(c.domain_lo.y)},
      {"x_max", number(c.domain_hi.x)},
      {"y_max", number(c.domain_hi.y)},
      {"nx", [&](auto& k, auto& v) { c.nx = to_int(k, v); }},
      {"ny", [&](auto& k, auto& v) { c.ny = to_int(k, v); }},
      {"n", [&](auto& k, auto& v) { c.nx = c.ny = to_int(k, v); }},
  };
  tab["numerics"] = {
      {"scheme", [&](auto&, auto& v) { c.scheme = parse_scheme(v); }},
      {"cfl_safety", number(c.cfl_safety)},
      {"dt", number(c.dt)},
      {"t_final", number(c.t_final)},
      {"band_outer", [&](auto& k, auto& v) { c.band.outer = to_int(k, v); }},
      {"band_inner", [&](auto& k, auto& v) { c.band.inner = to_int(k, v); }},
  };
  tab["front"] = {
      {"circles",
       [&](auto& k, auto& v) {
         c.shape.circles.clear();
         for (const auto& g : to_groups(k, v)) {
           if (g.size() != 3) throw ConfigError("'circles' entries are 'x y r'");
           c.shape.circles.push_back({{g[0], g[1]}, g[2]});
         }
       }},
      {"polygons", [&](auto& k, auto& v) { c.shape.polygons = to_polygons(k, v); }},
      {"islands", [&](auto& k, auto& v) { c.shape.islands = to_polygons(k, v); }},
  };
  tab["model"] = {
      {"kind", [&](auto&, auto& v) { c.speed.kind = to_model(v); }},
      {"speed", number(c.speed.constant_speed)},
      {"speed_left", number(c.speed.speed_left)},
      {"speed_right", number(c.speed.speed_right)},
      {"split_x", number(c.speed.split_x)},
      {"eps0", number(p.eps0)},
      {"eps1", number(p.eps1)},
      {"c0", number(p.c0)},
      {"c2", number(p.c2)},
      {"c1", number(p.c2)},
      {"a", number(p.a)},
      {"m", number(p.m)},
      {"n", number(p.n)},
      {"alpha_rear", number(p.alpha_rear)},
  };
  tab["wind"] = {
      {"kind", [&](auto&, auto& v) { w.kind = to_wind(v); }},
      {"speed", number(w.speed)},
      {"direction", number(w.direction)},
      {"direction_end", number(w.direction_end)},
      {"duration", number(w.duration)},
      {"strength", number(w.strength)},
      {"stagnation_x", number(w.stagnation.x)},
      {"stagnation_y", number(w.stagnation.y)},
  };
  tab["fuel"] = {
      {"enabled", [&](auto& k, auto& v) { f.enabled = to_bool(k, v); }},
      {"a_near", number(f.a_near)},
      {"a_far", number(f.a_far)},
      {"x_near", number(f.x_near)},
      {"x_far", number(f.x_far)},
  };
  tab["terrain"] = {
      {"kind", [&](auto&, auto& v) { t.kind = to_terrain(v); }},
      {"center_x", number(t.center.x)},
      {"center_y", number(t.center.y)},
      {"height", number(t.height)},
      {"width", number(t.width)},
  };
  tab["output"] = {
      {"directory", [&](auto&, auto& v) { c.output_dir = v; }},
      {"snapshot_interval", number(c.snapshot_interval)},
      {"dump_field", [&](auto& k, auto& v) { c.dump_field = to_bool(k, v); }},
  };
  tab["scenario"] = {
      {"name", [&](auto&, auto& v) { c.name = v; }},
  };
  return tab;
}

// The ini reader only knows ';' comments; '#' lines are accepted too.
std::string strip_hash_comments(std::istream& in) {
  std::string out, line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t");
    if (first != std::string::npos && line[first] == '#') line.clear();
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace

ScenarioConfig parse_config(std::istream& in, ScenarioConfig base) {
  std::istringstream text(strip_hash_comments(in));
  pt::ptree tree;
  try {
    pt::read_ini(text, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError("malformed config (line " + std::to_string(e.line()) + "): " + e.message());
  }
  ScenarioConfig cfg = std::move(base);
  const Table table = make_table(cfg);
  for (const auto& [section, entries] : tree) {
    if (entries.empty() && !entries.data().empty()) throw ConfigError("key outside any section: " + section);
    const auto sec = table.find(section);
    if (sec == table.end()) throw ConfigError("unknown section [" + section + "]");
    for (const auto& [key, node] : entries) {
      const auto setter = sec->second.find(key);
      if (setter == sec->second.end()) throw ConfigError("unknown key '" + key + "' in [" + section + "]");
      setter->second(key, node.get_value<std::string>());
    }
  }
  return cfg;
}

ScenarioConfig load_config(const std::string& path, ScenarioConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  try {
    return parse_config(in, std::move(base));
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

namespace {

std::string model_name(SpeedModelKind k) {
  switch (k) {
    case SpeedModelKind::kConstant: return "constant";
    case SpeedModelKind::kPiecewiseConstant: return "piecewise";
    case SpeedModelKind::kFull: return "full";
    case SpeedModelKind::kSimplified: return "simplified";
  }
  return "constant";
}

std::string wind_name(WindKind k) {
  switch (k) {
    case WindKind::kConstant: return "constant";
    case WindKind::kRotating: return "rotating";
    case WindKind::kCounterflow: return "counterflow";
  }
  return "constant";
}

void write_polygons(std::ostream& out, const char* key, const std::vector<Polygon>& polys) {
  if (polys.empty()) return;
  out << key << " =";
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (i > 0) out << " ;";
    for (const Vec2& p : polys[i].points) out << ' ' << p.x << ' ' << p.y;
  }
  out << '\n';
}

}  // namespace

void write_config(std::ostream& out, const ScenarioConfig& c) {
  const auto flags = out.flags();
  const auto prec = out.precision();
  out << std::setprecision(17);
  const FireModelParams& p = c.speed.params;
  const WindField& w = c.speed.wind;
  out << "[scenario]\nname = " << c.name << "\n\n";
  out << "[domain]\nx_min = " << c.domain_lo.x << "\ny_min = " << c.domain_lo.y << "\nx_max = " << c.domain_hi.x
      << "\ny_max = " << c.domain_hi.y << "\nnx = " << c.nx << "\nny = " << c.ny << "\n\n";
  out << "[numerics]\nscheme = " << scheme_name(c.scheme) << "\ncfl_safety = " << c.cfl_safety << "\ndt = " << c.dt
      << "\nt_final = " << c.t_final << "\nband_outer = " << c.band.outer << "\nband_inner = " << c.band.inner
      << "\n\n";
  out << "[front]\n";
  if (!c.shape.circles.empty()) {
    out << "circles =";
    for (std::size_t i = 0; i < c.shape.circles.size(); ++i) {
      const Circle& ci = c.shape.circles[i];
      out << (i > 0 ? " ; " : " ") << ci.center.x << ' ' << ci.center.y << ' ' << ci.radius;
    }
    out << '\n';
  }
  write_polygons(out, "polygons", c.shape.polygons);
  write_polygons(out, "islands", c.shape.islands);
  out << "\n[model]\nkind = " << model_name(c.speed.kind) << "\nspeed = " << c.speed.constant_speed
      << "\nspeed_left = " << c.speed.speed_left << "\nspeed_right = " << c.speed.speed_right
      << "\nsplit_x = " << c.speed.split_x << "\neps0 = " << p.eps0 << "\neps1 = " << p.eps1 << "\nc0 = " << p.c0
      << "\nc2 = " << p.c2 << "\na = " << p.a << "\nm = " << p.m << "\nn = " << p.n
      << "\nalpha_rear = " << p.alpha_rear << "\n\n";
  out << "[wind]\nkind = " << wind_name(w.kind) << "\nspeed = " << w.speed << "\ndirection = " << w.direction
      << "\ndirection_end = " << w.direction_end << "\nduration = " << w.duration << "\nstrength = " << w.strength
      << "\nstagnation_x = " << w.stagnation.x << "\nstagnation_y = " << w.stagnation.y << "\n\n";
  const FuelField& f = c.speed.fuel;
  out << "[fuel]\nenabled = " << (f.enabled ? "true" : "false") << "\na_near = " << f.a_near
      << "\na_far = " << f.a_far << "\nx_near = " << f.x_near << "\nx_far = " << f.x_far << "\n\n";
  const TerrainField& t = c.speed.terrain;
  out << "[terrain]\nkind = " << (t.kind == TerrainKind::kHill ? "hill" : "flat") << "\ncenter_x = " << t.center.x
      << "\ncenter_y = " << t.center.y << "\nheight = " << t.height << "\nwidth = " << t.width << "\n\n";
  out << "[output]\n";
  if (!c.output_dir.empty()) out << "directory = " << c.output_dir << '\n';
  out << "snapshot_interval = " << c.snapshot_interval << "\ndump_field = " << (c.dump_field ? "true" : "false")
      << '\n';
  out.flags(flags);
  out.precision(prec);
}

}  // namespace firefront
