#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "qwalk/commands.hpp"
#include "qwalk/config.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/io.hpp"
#include "qwalk/schwarzschild.hpp"
#include "oracles.hpp"

using namespace qwalk;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir(const std::string& tag) {
  const fs::path dir = fs::temp_directory_path() / ("qwalk_test_" + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_cli(const std::string& args) {
  const char* bin = std::getenv("QWALK_BIN");
  REQUIRE(bin != nullptr);
  const std::string cmd = std::string(bin) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("double formatting round-trips exactly") {
  std::mt19937_64 rng(4001);
  std::uniform_real_distribution<double> mag(-30.0, 30.0);
  for (int k = 0; k < 2000; ++k) {
    const double value = std::ldexp(oracle::uniform(rng, -1.0, 1.0),
                                    static_cast<int>(mag(rng)));
    const std::string text = format_double(value);
    CHECK(std::strtod(text.c_str(), nullptr) == value);
  }
  CHECK(format_double(0.1) == "0.10000000000000001");
}

TEST_CASE("config validation produces field-level errors") {
  RunConfig cfg;
  cfg.validate();  // defaults are valid

  RunConfig bad = cfg;
  bad.epsilon = -0.5;
  CHECK_THROWS_WITH_AS(bad.validate(), "epsilon: must be positive", ConfigError);

  bad = cfg;
  bad.field = "fancy";
  CHECK_THROWS_AS(bad.validate(), ConfigError);

  bad = cfg;
  bad.dx0 = 0.0;
  CHECK_THROWS_AS(bad.validate(), ConfigError);

  bad = cfg;
  bad.stride = 0;
  CHECK_THROWS_AS(bad.validate(), ConfigError);

  bad = cfg;
  bad.xauto = false;
  bad.xmin = 2.0;
  bad.xmax = 1.0;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
}

TEST_CASE("walk command writes snapshots with a constant probability column") {
  const fs::path dir = temp_dir("walk");
  RunConfig cfg;
  cfg.steps = 40;
  cfg.stride = 10;
  cfg.outdir = dir.string();
  std::ostringstream log;
  cmd_walk(cfg, log);

  REQUIRE(fs::exists(dir / "probability.tsv"));
  REQUIRE(fs::exists(dir / "snapshots.tsv"));
  REQUIRE(fs::exists(dir / "snapshot_000000.tsv"));
  REQUIRE(fs::exists(dir / "snapshot_000040.tsv"));

  std::ifstream in(dir / "probability.tsv");
  std::string line;
  std::getline(in, line);
  CHECK(line.rfind("# command=walk", 0) == 0);
  std::getline(in, line);
  CHECK(line == "j\tT\tpi");
  int rows = 0;
  while (std::getline(in, line)) {
    const auto tab = line.rfind('\t');
    const double pi = std::strtod(line.substr(tab + 1).c_str(), nullptr);
    CHECK(std::abs(pi - 1.0) < 1e-12);
    ++rows;
  }
  CHECK(rows == 41);
}

TEST_CASE("walk command with steps = 0 writes the initial snapshot only") {
  const fs::path dir = temp_dir("walk0");
  RunConfig cfg;
  cfg.steps = 0;
  cfg.outdir = dir.string();
  std::ostringstream log;
  cmd_walk(cfg, log);
  CHECK(fs::exists(dir / "snapshot_000000.tsv"));
  CHECK(!fs::exists(dir / "snapshot_000001.tsv"));
}

TEST_CASE("walk command rejects a grid too small for the gaussian") {
  RunConfig cfg;
  cfg.xauto = false;
  cfg.xmin = 40.0;
  cfg.xmax = 60.0;  // 8 sigma = 20 does not fit
  cfg.outdir = temp_dir("walk_small").string();
  std::ostringstream log;
  CHECK_THROWS_AS(cmd_walk(cfg, log), ConfigError);
}

TEST_CASE("boundary guard aborts a run that reaches the lattice edge") {
  RunConfig cfg;
  cfg.field = "constant";
  cfg.theta0 = 0.0;
  cfg.xauto = false;
  cfg.xmin = 20.0;
  cfg.xmax = 80.0;
  cfg.x0 = 50.5;
  cfg.dx0 = 2.5;
  cfg.steps = 100;
  cfg.outdir = temp_dir("walk_guard").string();
  std::ostringstream log;
  CHECK_THROWS_AS(cmd_walk(cfg, log), GuardError);
}

TEST_CASE("geodesic command writes both signs with termination reasons") {
  const fs::path dir = temp_dir("geo");
  RunConfig cfg;
  cfg.outdir = dir.string();
  cfg.geo_t0 = 0.0;
  cfg.geo_x0 = 100.0;
  cfg.geo_sign = 0;
  cfg.geo_tmax = 50.0;
  std::ostringstream log;
  cmd_geodesic(cfg, log);

  const std::string plus = slurp(dir / "geodesic_plus.tsv");
  CHECK(plus.find("termination=max-time") != std::string::npos);
  const std::string minus = slurp(dir / "geodesic_minus.tsv");
  CHECK(minus.find("termination=reached-singularity") != std::string::npos);

  RunConfig bad = cfg;
  bad.geo_x0 = -10.0;
  CHECK_THROWS_WITH_AS(cmd_geodesic(bad, log),
                       "geodesic: start violates X >= lambda*T (beyond the "
                       "singularity)",
                       ConfigError);
}

TEST_CASE("horizon-start geodesic file reports a flat deviation column") {
  const fs::path dir = temp_dir("geo_h");
  RunConfig cfg;
  cfg.outdir = dir.string();
  cfg.geo_x0 = 100.0;
  cfg.geo_sign = +1;
  cfg.geo_tmax = 100.0;
  std::ostringstream log;
  cmd_geodesic(cfg, log);

  std::ifstream in(dir / "geodesic_plus.tsv");
  std::string line;
  std::getline(in, line);  // header
  std::getline(in, line);  // columns
  CHECK(line == "T\tX\tr\ty\tdev_horizon");
  while (std::getline(in, line)) {
    const auto tab = line.rfind('\t');
    const double dev = std::strtod(line.substr(tab + 1).c_str(), nullptr);
    CHECK(std::abs(dev) < 1e-9);
  }
}

TEST_CASE("strobe demo command writes its report") {
  const fs::path dir = temp_dir("strobe");
  RunConfig cfg;
  cfg.outdir = dir.string();
  std::ostringstream log;
  cmd_strobe_demo(cfg, log);
  const std::string text = slurp(dir / "strobe_demo.tsv");
  CHECK(text.find("max_modulus_error=0") != std::string::npos);
  CHECK(text.find("j\tt\tu_re\tu_im\tu_abs") != std::string::npos);
}

TEST_CASE("figure1 panel defaults") {
  RunConfig base;
  const RunConfig a = figure1_panel_config('a', base);
  CHECK(a.lambda == 1.5);
  CHECK(a.x0 == 50.5);
  const RunConfig c = figure1_panel_config('c', base);
  CHECK(c.lambda == 1.0);
  CHECK(c.x0 == 100.0);  // on the horizon at T = 0
  const RunConfig d = figure1_panel_config('d', base);
  CHECK(d.x0 > qwalk::horizon_position({d.rg, d.lambda}, 0.0));  // exterior
  CHECK_THROWS_AS(figure1_panel_config('z', base), ConfigError);
}

TEST_CASE("identical runs produce byte-identical outputs") {
  const fs::path dir1 = temp_dir("det1");
  const fs::path dir2 = temp_dir("det2");
  RunConfig cfg;
  cfg.steps = 30;
  cfg.stride = 6;
  cfg.heatmap = true;
  std::ostringstream log;
  cfg.outdir = dir1.string();
  cmd_walk(cfg, log);
  cfg.outdir = dir2.string();
  cmd_walk(cfg, log);

  int compared = 0;
  for (const auto& entry : fs::directory_iterator(dir1)) {
    const fs::path other = dir2 / entry.path().filename();
    REQUIRE(fs::exists(other));
    const std::string a = slurp(entry.path());
    std::string b = slurp(other);
    // the header echoes outdir; normalize that one difference
    size_t pos;
    while ((pos = b.find(dir2.string())) != std::string::npos) {
      b.replace(pos, dir2.string().size(), dir1.string());
    }
    CHECK(a == b);
    ++compared;
  }
  CHECK(compared > 4);
}

TEST_CASE("cli subprocess: exit codes and config file precedence") {
  const char* bin = std::getenv("QWALK_BIN");
  if (bin == nullptr) return;  // only meaningful under ctest

  const fs::path dir = temp_dir("cli");
  CHECK(run_cli("walk --steps 10 --outdir " + (dir / "ok").string()) == 0);
  CHECK(run_cli("walk --epsilon -1 --outdir " + (dir / "bad").string()) == 2);
  CHECK(run_cli("walk --steps 100 --xauto false --xmin 20 --xmax 80 --outdir " +
                (dir / "guard").string()) == 3);
  CHECK(run_cli("nonsense") == 2);

  // config file provides values; explicit flags win
  const fs::path cfg_file = dir / "run.cfg";
  {
    std::ofstream out(cfg_file);
    out << "steps=14\n";
    out << "stride=7\n";
    out << "outdir=" << (dir / "from_file").string() << "\n";
  }
  CHECK(run_cli("walk --config " + cfg_file.string()) == 0);
  CHECK(fs::exists(dir / "from_file" / "snapshot_000014.tsv"));

  CHECK(run_cli("walk --config " + cfg_file.string() + " --steps 16 --outdir " +
                (dir / "override").string()) == 0);
  CHECK(fs::exists(dir / "override" / "snapshot_000016.tsv"));
  CHECK(!fs::exists(dir / "override" / "snapshot_000014.tsv"));

  // QWALK_OUTDIR supplies the default output directory
  const std::string env_cmd = std::string("QWALK_OUTDIR=") + (dir / "env").string() +
                              " " + bin + " walk --steps 4 >/dev/null 2>&1";
  CHECK(WEXITSTATUS(std::system(env_cmd.c_str())) == 0);
  CHECK(fs::exists(dir / "env" / "probability.tsv"));
}
