// soliton_lab: bright and dark solitons of the 1D NLSE with an oscillating
// attractive/expulsive trap and space-time-modulated nonlinearities.
//
// Subcommands:
//   run       evolve a scenario, write series.csv + snapshots/
//   verify    stationary, identity, constraint and PDE-residual suites
//   converge  temporal convergence study of the configured scheme
//   figures   emit figure data tables (--which 1..7)
//   sweep     parameter sweep; --param lambda --values v,-v runs the
//             sign-flip robustness study
//
// Exit codes: 0 success, 1 check failure, 2 usage/parse error, 3 I/O error.
// SOLITON_LAB_WORKERS caps the parallel fan-out of sweeps and studies.

#include <CLI11.hpp>
#include <json.hpp>

#include <nlse/csv.hpp>
#include <nlse/diagnostics.hpp>
#include <nlse/evolver.hpp>
#include <nlse/scenario.hpp>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace fs = std::filesystem;
using namespace nlse;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

std::string read_text_file(const fs::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f)
    throw fs::filesystem_error("cannot read", path, std::make_error_code(std::errc::io_error));
  std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  return text;
}

Scenario load_scenario_or_default(const std::string& path) {
  if (path.empty()) return default_scenario(Model::Cubic, SolitonType::Bright);
  return parse_scenario(read_text_file(path));
}

json scenario_json(const Scenario& s) { return json::parse(serialize_scenario(s)); }

void write_metadata(const fs::path& dir, const std::string& command, const json& extra,
                    const Scenario* scenario) {
  json doc;
  doc["tool"] = "soliton_lab";
  doc["command"] = command;
  for (const auto& item : extra.items()) doc[item.key()] = item.value();
  if (scenario) doc["scenario"] = scenario_json(*scenario);
  write_file(dir / "metadata.json", doc.dump(2) + "\n");
}

std::string series_csv(const Trajectory& traj) {
  Table t;
  t.columns = {"t", "norm", "peak", "centroid", "width", "l2_error", "linf_error"};
  t.values.resize(static_cast<Eigen::Index>(traj.times.size()), 7);
  for (size_t i = 0; i < traj.times.size(); ++i) {
    const Observables& o = traj.series[i];
    t.values.row(static_cast<Eigen::Index>(i)) << traj.times[i], o.norm, o.peak, o.centroid,
        o.width, o.l2_error, o.linf_error;
  }
  return to_csv(t);
}

std::string snapshot_csv(const Snapshot& snap, const RealArray& x) {
  Table t;
  t.columns = {"x", "re", "im", "density", "density_exact"};
  t.values.resize(x.size(), 5);
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const Complex v = snap.psi[i];
    t.values.row(i) << x[i], v.real(), v.imag(), std::norm(v), snap.density_exact[i];
  }
  return to_csv(t);
}

int cmd_run(const std::string& scenario_path, const std::string& out_dir) {
  const Scenario scenario = parse_scenario(read_text_file(scenario_path));
  const Trajectory traj = evolve(scenario);

  StagedDirectory staged{out_dir};
  write_metadata(staged.path(), "run",
                 {{"steps", traj.steps}, {"snapshots", traj.snapshots.size()}}, &scenario);
  write_file(staged.path() / "series.csv", series_csv(traj));
  fs::create_directories(staged.path() / "snapshots");
  const RealArray x = scenario.grid.points();
  for (size_t k = 0; k < traj.snapshots.size(); ++k) {
    write_file(staged.path() / "snapshots" / ("snap_" + std::to_string(k) + ".csv"),
               snapshot_csv(traj.snapshots[k], x));
  }
  staged.commit();
  std::cout << "run: " << traj.steps << " steps, " << traj.snapshots.size()
            << " snapshots -> " << out_dir << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& out_dir) {
  const std::vector<CheckResult> checks = verify_all();
  std::string report;
  bool all_passed = true;
  for (const CheckResult& check : checks) {
    const std::string line = format_check_line(check);
    std::cout << line << "\n";
    report += line + "\n";
    all_passed = all_passed && check.passed;
  }
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    write_file(fs::path(out_dir) / "report.txt", report);
    write_metadata(out_dir, "verify", {{"checks", checks.size()}}, nullptr);
  }
  std::cout << (all_passed ? "verify: all checks passed" : "verify: FAILURES present") << "\n";
  return all_passed ? kExitOk : kExitCheckFailure;
}

int cmd_converge(const std::string& scenario_path, int levels, const std::string& out_dir) {
  Scenario scenario = load_scenario_or_default(scenario_path);
  if (scenario_path.empty()) {
    // study defaults: short horizon, coarse base step
    scenario.time.t1 = 2.0;
    scenario.time.dt = 4e-3;
  }
  const ConvergenceReport report = convergence_study(scenario, levels);

  Table t;
  t.columns = {"dt", "linf_error_vs_analytic", "diff_to_next_level"};
  t.values.resize(static_cast<Eigen::Index>(report.levels.size()), 3);
  for (size_t k = 0; k < report.levels.size(); ++k) {
    const Real diff = k < report.diffs.size() ? report.diffs[k]
                                              : std::numeric_limits<Real>::quiet_NaN();
    t.values.row(static_cast<Eigen::Index>(k)) << report.levels[k].dt,
        report.levels[k].error_linf, diff;
  }
  std::cout << to_csv(t);
  if (report.order_reliable) {
    std::cout << "fitted temporal order: " << *report.order << "\n";
  } else {
    std::cout << "order estimate unreliable (differences at the roundoff floor)\n";
  }
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    write_file(fs::path(out_dir) / "convergence.csv", to_csv(t));
    json extra = {{"levels", levels},
                  {"order_reliable", report.order_reliable}};
    if (report.order) extra["order"] = *report.order;
    write_metadata(out_dir, "converge", extra, &scenario);
  }
  if (!report.order_reliable) return kExitOk;  // nothing asserted at the floor
  const bool ok = *report.order > 1.8 && *report.order < 2.2;
  if (!ok) std::cout << "converge: order outside [1.8, 2.2]\n";
  return ok ? kExitOk : kExitCheckFailure;
}

int cmd_figures(int which, const std::string& out_dir) {
  const std::vector<Table> tables = figure_data(which);
  fs::create_directories(out_dir);
  for (const Table& table : tables) {
    write_file(fs::path(out_dir) / (table.name + ".csv"), to_csv(table));
    std::cout << "wrote " << (fs::path(out_dir) / (table.name + ".csv")).string() << "\n";
  }
  write_metadata(out_dir, "figures", {{"which", which}}, nullptr);
  return kExitOk;
}

std::vector<Real> parse_values(const std::string& csv) {
  std::vector<Real> values;
  size_t pos = 0;
  while (pos <= csv.size()) {
    const size_t next = csv.find(',', pos);
    const std::string item = csv.substr(pos, next == std::string::npos ? next : next - pos);
    if (item.empty()) throw std::invalid_argument("sweep: empty entry in --values");
    Real v{};
    const auto res = std::from_chars(item.data(), item.data() + item.size(), v);
    if (res.ec != std::errc{} || res.ptr != item.data() + item.size())
      throw std::invalid_argument("sweep: cannot parse value '" + item + "'");
    values.push_back(v);
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return values;
}

int cmd_sweep(const std::string& param, const std::string& values_csv,
              const std::string& scenario_path, const std::string& out_dir) {
  const std::vector<Real> values = parse_values(values_csv);
  Scenario scenario = load_scenario_or_default(scenario_path);

  SweepResult result;
  if (param == "lambda" && values.size() == 2 && values[0] == -values[1] && values[0] != 0.0) {
    scenario.lambda = std::abs(values[0]);
    result = lambda_flip_study(scenario);
  } else {
    result = parameter_sweep(scenario, param, values);
  }

  Table t;
  t.columns = {"value", "peak_min", "peak_max", "width_final", "linf_error_max", "localized"};
  t.values.resize(static_cast<Eigen::Index>(result.entries.size()), 6);
  for (size_t i = 0; i < result.entries.size(); ++i) {
    const SweepEntry& e = result.entries[i];
    t.values.row(static_cast<Eigen::Index>(i)) << e.value, e.peak_min, e.peak_max, e.width_final,
        e.linf_error_max, e.localized ? 1.0 : 0.0;
  }
  std::cout << to_csv(t);
  bool all_passed = true;
  std::string report;
  for (const CheckResult& check : result.checks) {
    const std::string line = format_check_line(check);
    std::cout << line << "\n";
    report += line + "\n";
    all_passed = all_passed && check.passed;
  }
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    write_file(fs::path(out_dir) / "sweep.csv", to_csv(t));
    if (!report.empty()) write_file(fs::path(out_dir) / "report.txt", report);
    write_metadata(out_dir, "sweep", {{"param", result.param}, {"values", values}}, &scenario);
  }
  return all_passed ? kExitOk : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bright/dark solitons of the modulated 1D nonlinear Schrodinger equation"};
  app.require_subcommand(1);
  app.footer("SOLITON_LAB_WORKERS caps the parallel fan-out of sweeps and studies.");

  std::string scenario_path, out_dir, param, values_csv;
  int which = 0;
  int levels = 3;

  auto* run_cmd = app.add_subcommand("run", "evolve a scenario and write its trajectory");
  run_cmd->add_option("--scenario", scenario_path, "scenario JSON file")->required();
  run_cmd->add_option("--out", out_dir, "output directory (must not exist)")->required();

  auto* verify_cmd =
      app.add_subcommand("verify", "run the stationary/identity/constraint/residual suites");
  verify_cmd->add_option("--out", out_dir, "directory for report.txt");

  auto* converge_cmd = app.add_subcommand("converge", "temporal convergence study");
  converge_cmd->add_option("--scenario", scenario_path, "scenario JSON file");
  converge_cmd->add_option("--levels", levels, "number of dt halvings to run")
      ->check(CLI::Range(3, 12));
  converge_cmd->add_option("--out", out_dir, "output directory");

  auto* figures_cmd = app.add_subcommand("figures", "emit figure data tables");
  figures_cmd->add_option("--which", which, "figure id (1..7)")->required()->check(CLI::Range(1, 7));
  figures_cmd->add_option("--out", out_dir, "output directory")->required();

  auto* sweep_cmd = app.add_subcommand("sweep", "parameter sweep / lambda flip study");
  sweep_cmd->add_option("--param", param, "lambda | alpha | beta")->required();
  sweep_cmd->add_option("--values", values_csv, "comma-separated values")->required();
  sweep_cmd->add_option("--scenario", scenario_path, "base scenario JSON file");
  sweep_cmd->add_option("--out", out_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (run_cmd->parsed()) return cmd_run(scenario_path, out_dir);
    if (verify_cmd->parsed()) return cmd_verify(out_dir);
    if (converge_cmd->parsed()) return cmd_converge(scenario_path, levels, out_dir);
    if (figures_cmd->parsed()) return cmd_figures(which, out_dir);
    if (sweep_cmd->parsed()) return cmd_sweep(param, values_csv, scenario_path, out_dir);
  } catch (const ScenarioError& e) {
    std::cerr << "scenario error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const StepFailure& e) {
    std::cerr << e.what() << "\n";
    return kExitCheckFailure;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  }
  return kExitUsage;
}
