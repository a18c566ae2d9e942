#include <doctest.h>

// End-to-end checks of the soliton_lab binary: exit codes, output layout,
// determinism of emitted files.

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace fs = std::filesystem;

namespace {

const char* kTinyScenario = R"({
  "model": "cubic",
  "branch": "bright",
  "grid": {"x_min": -40, "x_max": 40, "n": 256},
  "time": {"t0": 0, "t1": 0.05, "dt": 0.001, "snapshot_stride": 10}
})";

int run_tool(const std::string& args) {
  const std::string cmd = std::string(SOLITON_LAB_BIN) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f.good());
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("soliton_lab_test_" + std::to_string(::getpid()))) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("cli: usage errors exit with 2") {
  CHECK(run_tool("") == 2);
  CHECK(run_tool("frobnicate") == 2);
  CHECK(run_tool("figures --which 9 --out /tmp/nowhere") == 2);
  CHECK(run_tool("sweep --param mu --values 1,2") == 2);
}

TEST_CASE("cli: run writes a complete, transactional output tree") {
  TempDir tmp;
  const fs::path scenario = tmp.path / "scenario.json";
  std::ofstream(scenario) << kTinyScenario;
  const fs::path out = tmp.path / "out";

  CHECK(run_tool("run --scenario " + scenario.string() + " --out " + out.string()) == 0);
  CHECK(fs::exists(out / "metadata.json"));
  CHECK(fs::exists(out / "series.csv"));
  CHECK(fs::exists(out / "snapshots" / "snap_0.csv"));
  CHECK(fs::exists(out / "snapshots" / "snap_5.csv"));  // 50 steps, stride 10, + final

  const std::string series = slurp(out / "series.csv");
  CHECK(series.rfind("t,norm,peak,centroid,width,l2_error,linf_error\n", 0) == 0);
  const std::string snap = slurp(out / "snapshots" / "snap_0.csv");
  CHECK(snap.rfind("x,re,im,density,density_exact\n", 0) == 0);
  const std::string meta = slurp(out / "metadata.json");
  CHECK(meta.find("\"scenario\"") != std::string::npos);

  // an existing non-empty output directory is refused, exit 3
  CHECK(run_tool("run --scenario " + scenario.string() + " --out " + out.string()) == 3);
}

TEST_CASE("cli: run determinism — identical scenario gives byte-identical output") {
  TempDir tmp;
  const fs::path scenario = tmp.path / "scenario.json";
  std::ofstream(scenario) << kTinyScenario;
  const fs::path out1 = tmp.path / "a";
  const fs::path out2 = tmp.path / "b";
  CHECK(run_tool("run --scenario " + scenario.string() + " --out " + out1.string()) == 0);
  CHECK(run_tool("run --scenario " + scenario.string() + " --out " + out2.string()) == 0);
  CHECK(slurp(out1 / "series.csv") == slurp(out2 / "series.csv"));
  CHECK(slurp(out1 / "snapshots" / "snap_5.csv") == slurp(out2 / "snapshots" / "snap_5.csv"));
}

TEST_CASE("cli: run failures leave nothing behind") {
  TempDir tmp;
  const fs::path scenario = tmp.path / "scenario.json";
  std::ofstream(scenario) << kTinyScenario;

  // output path nested under a regular file: I/O error, exit 3
  const fs::path blocker = tmp.path / "blocker";
  std::ofstream(blocker) << "file";
  const fs::path out = blocker / "out";
  CHECK(run_tool("run --scenario " + scenario.string() + " --out " + out.string()) == 3);
  CHECK(!fs::exists(out));

  // malformed scenario: exit 2
  const fs::path bad = tmp.path / "bad.json";
  std::ofstream(bad) << "{not json";
  const fs::path out2 = tmp.path / "out2";
  CHECK(run_tool("run --scenario " + bad.string() + " --out " + out2.string()) == 2);
  CHECK(!fs::exists(out2));
  CHECK(!fs::exists(tmp.path / "out2.partial"));

  // invalid scenario content: exit 2
  const fs::path invalid = tmp.path / "invalid.json";
  std::ofstream(invalid) << R"({"model": "cubic", "branch": "dark", "scheme": "split-step-fourier"})";
  CHECK(run_tool("run --scenario " + invalid.string() + " --out " + out2.string()) == 2);

  // missing scenario file: exit 3
  CHECK(run_tool("run --scenario " + (tmp.path / "absent.json").string() + " --out " +
                 out2.string()) == 3);
}

TEST_CASE("cli: figures emits deterministic tables") {
  TempDir tmp;
  const fs::path out1 = tmp.path / "f1";
  const fs::path out2 = tmp.path / "f2";
  CHECK(run_tool("figures --which 1 --out " + out1.string()) == 0);
  CHECK(run_tool("figures --which 1 --out " + out2.string()) == 0);
  CHECK(fs::exists(out1 / "fig1_periodic.csv"));
  CHECK(fs::exists(out1 / "fig1_quasiperiodic.csv"));
  CHECK(slurp(out1 / "fig1_periodic.csv") == slurp(out2 / "fig1_periodic.csv"));
  const std::string head = slurp(out1 / "fig1_periodic.csv").substr(0, 8);
  CHECK(head == "t,omega\n");
}

TEST_CASE("cli: sweep runs the flip study and writes its report") {
  TempDir tmp;
  const fs::path scenario = tmp.path / "scenario.json";
  std::ofstream(scenario) << kTinyScenario;
  const fs::path out = tmp.path / "sweep";
  CHECK(run_tool("sweep --param lambda --values 0.5,-0.5 --scenario " + scenario.string() +
                 " --out " + out.string()) == 0);
  CHECK(fs::exists(out / "sweep.csv"));
  CHECK(fs::exists(out / "report.txt"));
  const std::string report = slurp(out / "report.txt");
  CHECK(report.find("center-density-ratio") != std::string::npos);
  CHECK(report.find("FAIL") == std::string::npos);
}

TEST_CASE("cli: converge on a short scenario asserts second order") {
  TempDir tmp;
  const fs::path scenario = tmp.path / "scenario.json";
  std::ofstream(scenario) << R"({
    "model": "cubic", "branch": "bright",
    "grid": {"x_min": -40, "x_max": 40, "n": 1024},
    "time": {"t0": 0, "t1": 0.5, "dt": 0.004, "snapshot_stride": 1000}
  })";
  const fs::path out = tmp.path / "conv";
  CHECK(run_tool("converge --scenario " + scenario.string() + " --levels 3 --out " +
                 out.string()) == 0);
  CHECK(fs::exists(out / "convergence.csv"));
  const std::string meta = slurp(out / "metadata.json");
  CHECK(meta.find("\"order\"") != std::string::npos);
}

TEST_CASE("cli: verify passes on the default configuration") {
  TempDir tmp;
  const fs::path out = tmp.path / "verify";
  CHECK(run_tool("verify --out " + out.string()) == 0);
  const std::string report = slurp(out / "report.txt");
  CHECK(report.find("stationary/cubic-bright") != std::string::npos);
  CHECK(report.find("identity-A/cubic") != std::string::npos);
  CHECK(report.find("FAIL") == std::string::npos);
}
