#pragma once

// Validation orchestration: residuals of the full equation on the assembled
// analytic solutions, temporal convergence of the integrators, the lambda-flip
// robustness study, figure-data generation, and the named check suites that
// back both the `verify` subcommand and the acceptance harness.

#include <nlse/csv.hpp>
#include <nlse/evolver.hpp>

#include <functional>
#include <optional>

namespace nlse {

// ---------- residual of the full PDE ----------

struct ResidualLattice {
  Real x_min = -5.0, x_max = 5.0;
  int nx = 41;
  Real t_min = 0.4, t_max = 6.4;
  int nt = 25;
  Real h0 = 0.05;  // base stencil step, halved per level
  int levels = 3;
};

struct ResidualLevel {
  Real h;
  Real max_residual;
};

struct ResidualReport {
  std::string quantity;
  std::vector<ResidualLevel> levels;
  std::optional<Real> order;  // reported only when >= 3 levels ran
  bool order_reliable = true;
  Real field_scale = 0.0;  // max |psi| over the lattice
};

// R = i psi_t + psi_xx - v psi - (g3 |psi|^2 + g5 |psi|^4) psi on the analytic
// psi, with 4th-order stencils in x and t (analytic evaluation at shifted
// times; no evolution involved). The residual vanishes identically, so the
// report measures pure differencing error, O(h^4). With potential_override
// the potential of a different branch is substituted and the residual must
// plateau at the size of the potential mismatch instead.
ResidualReport pde_residual(const SimilarityMap& map, const StationaryProfile& profile,
                            const ResidualLattice& lattice,
                            std::optional<Branch> potential_override = std::nullopt);

// ---------- temporal convergence ----------

struct ConvergenceLevel {
  Real dt;
  Real error_linf;  // field error against the analytic solution at the final time
};

struct ConvergenceReport {
  std::vector<ConvergenceLevel> levels;
  std::vector<Real> diffs;  // |psi_k - psi_{k+1}|_inf between consecutive levels
  std::optional<Real> order;
  bool order_reliable = true;
};

// Runs the scenario at dt, dt/2, ... against the analytic solution. The order
// is fitted on consecutive-level field differences, which cancel the fixed
// spatial error of the finite-difference scheme; per-level analytic errors
// are reported alongside.
ConvergenceReport convergence_study(const Scenario& scenario, int levels);

// Core used by the scenario wrapper and by tests: run(dt) returns the field
// at the common final time on a fixed grid.
ConvergenceReport temporal_convergence(const std::function<ComplexArray(Real)>& run,
                                       const ComplexArray& exact, Real dt0, int levels);

// ---------- sweeps ----------

struct CheckResult {
  std::string name;
  bool passed;
  Real observed;
  Real threshold;
  std::string note;
};

struct SweepEntry {
  Real value;
  Real peak_min, peak_max;   // extremes of the peak-density time series
  Real width_final;
  Real linf_error_max;       // worst density error against the analytic field
  bool localized;            // single peak (bright) / single notch (dark) throughout
};

struct SweepResult {
  std::string param;
  std::vector<SweepEntry> entries;  // ascending in value
  std::vector<CheckResult> checks;
};

// Runs the scenario with lambda and -lambda. Both runs must stay localized;
// the center densities differ by the analytic factor u(0)|_{+l}/u(0)|_{-l}.
SweepResult lambda_flip_study(const Scenario& scenario);

// Generic sweep over "lambda" | "alpha" | "beta"; values must be strictly
// monotone after sorting (duplicates rejected).
SweepResult parameter_sweep(const Scenario& scenario, const std::string& param,
                            std::vector<Real> values);

// ---------- figure data ----------

struct FigureParams {
  Real lambda = 0.5;
  int nx = 401;
  int nt = 401;
};

// Deterministic figure tables:
//   1: omega(t) series, periodic (alpha=0.1, beta=0) and quasiperiodic
//      (alpha=beta=0.1) panels
//   2: potential surfaces v(x,t), cubic bright (a) / dark (b), x in [-10,10]
//   3: same potentials restricted to x in [-2,2]
//   4-7: density surfaces |psi|^2 for cubic bright/dark and cq bright/dark,
//        periodic (a) and quasiperiodic (b) panels
std::vector<Table> figure_data(int which, const FigureParams& params = {});

// one x-profile of a surface table (row block at time index it), by column
RealArray surface_row(const Table& surface, int it, int column);

// density-profile analysis
int count_local_maxima(const RealArray& density, Real floor);
bool single_peak(const RealArray& density, Real floor_ratio = 0.01);
bool single_notch_at_center(const RealArray& x, const RealArray& density, Real center_tol);

// quadratic coefficient of v from the two outermost samples of a surface row
Real quadratic_tail_coefficient(const RealArray& x, const RealArray& v);

// ---------- named check suites ----------

std::vector<CheckResult> verify_stationary_suite();
std::vector<CheckResult> verify_identity_suite();
std::vector<CheckResult> verify_constraint_suite();
std::vector<CheckResult> verify_pde_residual_suite();
std::vector<CheckResult> verify_all();

std::string format_check_line(const CheckResult& check);

}  // namespace nlse
