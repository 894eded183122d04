#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>

namespace fs = std::filesystem;

namespace {

const std::string kCli = FIREFRONT_CLI;
const std::string kData = FIREFRONT_TEST_DATA;

struct Result {
  int code;
  std::string err;
  std::string out;
};

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("firefront_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

Result cli(const std::string& args) {
  const fs::path dir = scratch("io");
  const std::string cmd = kCli + " " + args + " >" + (dir / "out").string() + " 2>" + (dir / "err").string();
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(dir / "err"), slurp(dir / "out")};
}

}  // namespace

TEST_CASE("run a config file") {
  const fs::path out = scratch("run");
  const Result r = cli("run " + kData + "/small_circle.ini --out " + out.string());
  CHECK(r.code == 0);
  for (int k = 0; k <= 10; ++k) {
    char name[32];
    std::snprintf(name, sizeof name, "front_%04d.txt", k);
    CHECK(fs::exists(out / name));
  }
  CHECK(fs::exists(out / "run.log"));
  CHECK(fs::exists(out / "snapshots.txt"));
  fs::remove_all(out);
}

TEST_CASE("preset run on a coarse mesh") {
  const fs::path out = scratch("preset");
  const Result r = cli("run --preset reference --n 151 --t-final 0.02 --out " + out.string());
  CHECK(r.code == 0);
  CHECK(fs::exists(out / "front_0010.txt"));
  CHECK(slurp(out / "front_0010.txt").rfind("t=0.02 ", 0) == 0);
  fs::remove_all(out);
}

TEST_CASE("missing config file") {
  const Result r = cli("run /no/such/scenario.ini");
  CHECK(r.code == 2);
  CHECK(r.err.find("/no/such/scenario.ini") != std::string::npos);
  CHECK(r.err.find('\n') == r.err.size() - 1);
}

TEST_CASE("distinct exit codes") {
  CHECK(cli("run " + kData + "/malformed.ini").code == 2);
  CHECK(cli("run --preset volcano").code == 5);
  CHECK(cli("presets volcano").code == 5);
  const Result bad = cli("run " + kData + "/invalid.ini");
  CHECK(bad.code == 6);
  CHECK(bad.err.find("cfl_safety") != std::string::npos);
  CHECK(cli("fmm " + kData + "/fire.ini").code == 6);
  CHECK(cli("--no-such-flag").code == 2);
  CHECK(cli("").code == 2);
}

TEST_CASE("presets listing") {
  const Result r = cli("presets");
  CHECK(r.code == 0);
  for (const char* name : {"reference", "merge-island", "fuel-slow", "fuel-fast", "rotating", "counterflow-offset",
                           "counterflow-symmetric", "hill"})
    CHECK(r.out.find(name) != std::string::npos);
  const Result one = cli("presets reference");
  CHECK(one.code == 0);
  CHECK(one.out.find("[model]") != std::string::npos);
}

TEST_CASE("fast marching subcommand") {
  const fs::path out = scratch("fmm");
  const Result r = cli("fmm " + kData + "/small_circle.ini --t 0 0.2 --out " + out.string());
  CHECK(r.code == 0);
  CHECK(fs::exists(out / "arrival.txt"));
  CHECK(fs::exists(out / "front_0001.txt"));
  fs::remove_all(out);
}

TEST_CASE("converge and bench subcommands") {
  const fs::path out = scratch("studies");
  const Result c = cli("converge --dx 0.05 0.025 --records " + (out / "conv.txt").string());
  CHECK(c.code == 0);
  CHECK(c.out.find("ratios") != std::string::npos);
  CHECK(slurp(out / "conv.txt").find("[row 1]") != std::string::npos);
  const Result b = cli("bench --n 51 101 --t-final 0.01");
  CHECK(b.code == 0);
  CHECK(b.out.find("101") != std::string::npos);
  fs::remove_all(out);
}
