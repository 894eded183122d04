// Command-line front end: scenario runs, convergence and timing studies,
// and fast-marching arrival times.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "firefront/config.hpp"
#include "firefront/error.hpp"
#include "firefront/fmm.hpp"
#include "firefront/metrics.hpp"
#include "firefront/output.hpp"
#include "firefront/presets.hpp"
#include "firefront/simulator.hpp"

namespace ff = firefront;

namespace {

enum Exit : int {
  kOk = 0,
  kConfig = 2,
  kRuntime = 3,
  kUnknownPreset = 5,
  kInvalidParameter = 6,
};

struct Source {
  std::string config;
  std::string preset;
};

ff::ScenarioConfig resolve(const Source& src, const ff::ScenarioConfig& fallback, bool need_one) {
  if (need_one && src.config.empty() && src.preset.empty())
    throw ff::ConfigError("give a config file or --preset NAME");
  ff::ScenarioConfig cfg = src.preset.empty() ? fallback : ff::preset(src.preset);
  if (!src.config.empty()) cfg = ff::load_config(src.config, cfg);
  return cfg;
}

void write_text(const std::string& path, const auto& writer) {
  std::ofstream out(path);
  if (!out) throw ff::Error("cannot write " + path);
  writer(out);
}

int cmd_run(const Source& src, const std::string& out_dir, std::optional<int> n, std::optional<double> t_final,
            const std::string& scheme) {
  ff::ScenarioConfig cfg = resolve(src, ff::ScenarioConfig{}, true);
  if (!out_dir.empty()) cfg.output_dir = out_dir;
  if (cfg.output_dir.empty()) cfg.output_dir = "out/" + cfg.name;
  if (n) cfg.nx = cfg.ny = *n;
  if (t_final) cfg.t_final = *t_final;
  if (!scheme.empty()) cfg.scheme = ff::parse_scheme(scheme);
  const ff::RunOutput result = ff::run(cfg);
  ff::print_summary(std::cout, cfg, result);
  std::cout << "output: " << cfg.output_dir << '\n';
  if (result.status == ff::RunStatus::kDomainExit)
    std::cerr << "warning: the front reached the domain boundary at t=" << result.t_end << " before t_final="
              << cfg.t_final << '\n';
  if (result.status == ff::RunStatus::kExtinguished)
    std::cerr << "warning: the front vanished at t=" << result.t_end << '\n';
  return kOk;
}

int cmd_converge(const std::string& scheme, std::vector<double> spacings, const std::string& records) {
  ff::ScenarioConfig base = ff::expanding_circle();
  if (!scheme.empty()) base.scheme = ff::parse_scheme(scheme);
  if (spacings.empty()) spacings = {0.01, 0.005, 0.0025, 0.00125};
  std::cout << "expanding circle, scheme " << ff::scheme_name(base.scheme) << ", dt " << base.dt << ", T_f "
            << base.t_final << '\n';
  const ff::ConvergenceTable table = ff::convergence_study(base, spacings);
  ff::print_convergence(std::cout, table);
  if (!records.empty()) write_text(records, [&](std::ostream& o) { ff::write_convergence_records(o, table); });
  return kOk;
}

int cmd_bench(std::vector<int> nodes, const std::string& records, std::optional<double> t_final) {
  ff::ScenarioConfig base = ff::expanding_circle();
  if (t_final) base.t_final = *t_final;
  if (nodes.empty())
    for (int n = 101; n <= 1001; n += 100) nodes.push_back(n);
  std::cout << "expanding circle, scheme " << ff::scheme_name(base.scheme) << ", dt " << base.dt << ", T_f "
            << base.t_final << ", band " << base.band.outer << "/" << base.band.inner << '\n';
  const std::vector<ff::BenchRow> rows = ff::bench(base, nodes);
  ff::print_bench(std::cout, rows);
  if (!records.empty()) write_text(records, [&](std::ostream& o) { ff::write_bench_records(o, rows); });
  return kOk;
}

int cmd_fmm(const Source& src, const std::string& out_dir, std::vector<double> times) {
  const ff::ScenarioConfig cfg = resolve(src, ff::ScenarioConfig{}, true);
  cfg.validate();
  const ff::ArrivalField arrival = ff::fmm_solve(cfg.grid(), cfg.shape, cfg.resolved_speed());
  const std::filesystem::path dir = out_dir.empty() ? (cfg.output_dir.empty() ? "out/" + cfg.name + "-fmm"
                                                                                 : cfg.output_dir)
                                                    : out_dir;
  std::filesystem::create_directories(dir);
  ff::write_field((dir / "arrival.txt").string(), arrival.grid(), arrival.signed_times());
  if (times.empty()) {
    const double step = cfg.resolved_snapshot_interval();
    for (int k = 0; k <= 10; ++k) times.push_back(k * step);
  }
  for (std::size_t k = 0; k < times.size(); ++k)
    ff::write_front((dir / ff::snapshot_name(k)).string(), ff::front_at_time(arrival, times[k]), times[k]);
  std::cout << "fast marching: " << arrival.accepted << " nodes accepted, " << times.size() << " fronts written to "
            << dir.string() << '\n';
  return kOk;
}

int cmd_presets(const std::string& name) {
  if (name.empty()) {
    for (const auto& p : ff::preset_names()) std::cout << p << '\n';
    return kOk;
  }
  ff::write_config(std::cout, ff::preset(name));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Level-set and fast-marching front propagation for wildfire spread"};
  app.require_subcommand(1);

  Source src;
  std::string out_dir, scheme, records, preset_name;
  std::optional<int> n;
  std::optional<double> t_final;
  std::vector<double> spacings, times;
  std::vector<int> nodes;

  CLI::App* run = app.add_subcommand("run", "Run a scenario and write front snapshots");
  run->add_option("config", src.config, "Scenario config file");
  run->add_option("--preset", src.preset, "Start from a named preset (a config file overrides it)");
  run->add_option("--out", out_dir, "Output directory");
  run->add_option("--n", n, "Nodes per axis");
  run->add_option("--t-final", t_final, "Final time");
  run->add_option("--scheme", scheme, "eo1, lf1, llf1 or eno2");

  CLI::App* converge = app.add_subcommand("converge", "Error norms of the expanding circle over grid spacings");
  converge->add_option("--scheme", scheme, "eo1, lf1, llf1 or eno2");
  converge->add_option("--dx", spacings, "Grid spacings (default 0.01 0.005 0.0025 0.00125)");
  converge->add_option("--records", records, "Also write key = value records here");

  CLI::App* bench = app.add_subcommand("bench", "Wall-clock timings of the expanding circle");
  bench->add_option("--n", nodes, "Nodes per axis (default 101 201 ... 1001)");
  bench->add_option("--t-final", t_final, "Final time (default 0.4)");
  bench->add_option("--records", records, "Also write key = value records here");

  CLI::App* fmm = app.add_subcommand("fmm", "Arrival times by fast marching (isotropic speeds)");
  fmm->add_option("config", src.config, "Scenario config file");
  fmm->add_option("--preset", src.preset, "Start from a named preset");
  fmm->add_option("--out", out_dir, "Output directory");
  fmm->add_option("--t", times, "Times at which to extract fronts");

  CLI::App* presets = app.add_subcommand("presets", "List presets, or print one as a config file");
  presets->add_option("name", preset_name, "Preset to print");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfig;
  }

  try {
    if (*run) return cmd_run(src, out_dir, n, t_final, scheme);
    if (*converge) return cmd_converge(scheme, spacings, records);
    if (*bench) return cmd_bench(nodes, records, t_final);
    if (*fmm) return cmd_fmm(src, out_dir, times);
    if (*presets) return cmd_presets(preset_name);
  } catch (const ff::UnknownPreset& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUnknownPreset;
  } catch (const ff::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfig;
  } catch (const ff::InputError& e) {
    std::cerr << "error: invalid parameters: " << e.what() << '\n';
    return kInvalidParameter;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kRuntime;
  }
  return kOk;
}
