#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>

#include "firefront/error.hpp"
#include "firefront/presets.hpp"
#include "firefront/simulator.hpp"

using namespace firefront;
namespace fs = std::filesystem;

namespace {

// Reference fire case on a coarser mesh.
ScenarioConfig small_reference() {
  ScenarioConfig c = preset("reference");
  c.nx = c.ny = 301;
  return c;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("firefront_test_" + name);
  fs::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("zero final time outputs the initial front only") {
  ScenarioConfig c = expanding_circle(101);
  c.t_final = 0.0;
  const RunOutput r = run(c);
  CHECK(r.steps == 0);
  CHECK(r.status == RunStatus::kCompleted);
  REQUIRE(r.snapshots.size() == 1);
  CHECK(r.snapshots[0].t == 0.0);
  CHECK(r.snapshots[0].front.curves.size() == 1);
}

TEST_CASE("snapshot cadence and files") {
  ScenarioConfig c = small_reference();
  const fs::path dir = scratch("cadence");
  c.output_dir = dir.string();
  const RunOutput r = run(c);
  CHECK(r.status == RunStatus::kCompleted);
  REQUIRE(r.snapshots.size() == 11);
  for (std::size_t k = 0; k < r.snapshots.size(); ++k) {
    CHECK(r.snapshots[k].t == doctest::Approx(0.01 * static_cast<double>(k)).epsilon(1e-12));
    CHECK(fs::exists(r.snapshots[k].path));
    if (k > 0) CHECK(r.snapshots[k].t > r.snapshots[k - 1].t);
  }
  CHECK(r.t_end == doctest::Approx(0.1));
  CHECK(r.steps == 1000);
  CHECK(r.max_courant <= 1.0);
  CHECK(fs::exists(dir / "config.ini"));
  CHECK(fs::exists(dir / "snapshots.txt"));
  const std::string log = slurp(dir / "run.log");
  CHECK(log.find("# seconds") != std::string::npos);
  CHECK(log.find("rebuild") != std::string::npos);
  // Snapshot header follows the front file format.
  std::ifstream first(r.snapshots[1].path);
  std::string header;
  std::getline(first, header);
  CHECK(header.rfind("t=0.01 curves=1", 0) == 0);
  fs::remove_all(dir);
}

TEST_CASE("identical configs give identical files") {
  ScenarioConfig c = small_reference();
  c.t_final = 0.03;
  const fs::path a = scratch("det_a"), b = scratch("det_b");
  c.output_dir = a.string();
  const RunOutput ra = run(c);
  c.output_dir = b.string();
  run(c);
  for (const Snapshot& s : ra.snapshots) {
    const fs::path name = fs::path(s.path).filename();
    CHECK(slurp(a / name) == slurp(b / name));
    CHECK_FALSE(slurp(a / name).empty());
  }
  fs::remove_all(a);
  fs::remove_all(b);
}

TEST_CASE("burned area never decreases") {
  for (const char* name : {"reference", "rotating", "merge-island"}) {
    ScenarioConfig c = preset(name);
    c.nx = c.ny = 301;
    const RunOutput r = run(c);
    for (std::size_t k = 1; k < r.snapshots.size(); ++k)
      CHECK(r.snapshots[k].burned_area >= r.snapshots[k - 1].burned_area);
  }
}

TEST_CASE("reaching the boundary ends the run cleanly") {
  ScenarioConfig c = expanding_circle(101);
  c.shape = InitialShape::circle({2.5, 1.5}, 0.3);
  c.t_final = 0.5;
  const RunOutput r = run(c);
  CHECK(r.status == RunStatus::kDomainExit);
  CHECK(r.t_end < 0.5);
  CHECK(r.t_end > 0.1);
  CHECK(r.snapshots.back().t == r.t_end);
  CHECK(status_name(r.status) == "domain-exit");
}

TEST_CASE("a shrinking front burns out") {
  ScenarioConfig c = expanding_circle(101);
  c.shape = InitialShape::circle({1.5, 1.5}, 0.1);
  c.speed.constant_speed = -1.0;
  c.t_final = 0.4;
  const RunOutput r = run(c);
  CHECK(r.status == RunStatus::kExtinguished);
  CHECK(r.t_end < 0.15);
}

TEST_CASE("reinitialization hook sees the rebuilt band") {
  ScenarioConfig c = expanding_circle(101);
  c.t_final = 0.2;
  std::size_t calls = 0;
  RunHooks hooks;
  hooks.after_reinit = [&](const LevelSetField& f, const NarrowBand& band, const Front& front, double t) {
    ++calls;
    CHECK_FALSE(front.empty());
    CHECK(t > 0.0);
    CHECK(band.size() > 0);
    CHECK(f.grid().nx() == 101);
  };
  const RunOutput r = run(c, hooks);
  CHECK(calls == r.reinits);
  CHECK(r.reinits > 0);
  std::size_t logged = 0;
  for (const auto& e : r.log) logged += e.rebuilt ? 1 : 0;
  CHECK(logged == r.reinits);
}

TEST_CASE("invalid configs are rejected before running") {
  ScenarioConfig c = expanding_circle(101);
  c.t_final = -0.1;
  CHECK_THROWS_AS(run(c), InputError);
}
