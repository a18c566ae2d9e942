#include <doctest.h>

#include <nlse/diagnostics.hpp>

#include <cmath>
#include <numbers>

using namespace nlse;

namespace {

SimilarityMap standard_map(Branch b, Real lambda = 0.5, Real alpha = 0.1, Real beta = 0.0) {
  return {WidthProfile{alpha, beta}, ModulationShape{lambda}, branch_couplings(b)};
}

}  // namespace

TEST_CASE("pde residual: 4th-order shrink on the matched cubic-bright branch") {
  const SimilarityMap map = standard_map(Branch::CubicBright);
  const StationaryProfile profile{Branch::CubicBright};
  const ResidualLattice lattice;
  const auto report = pde_residual(map, profile, lattice);
  REQUIRE(report.levels.size() == 3);
  for (size_t l = 0; l + 1 < report.levels.size(); ++l) {
    const Real ratio = report.levels[l].max_residual / report.levels[l + 1].max_residual;
    CHECK(ratio > 12.0);
    CHECK(ratio < 20.0);
  }
  REQUIRE(report.order.has_value());
  CHECK(*report.order == doctest::Approx(4.0).epsilon(0.15));
}

TEST_CASE("pde residual: pure differencing error for constant coefficients") {
  // alpha = beta = 0, lambda = 0: the assembled field is time-independent, so
  // the time stencil contributes nothing and the whole residual is the h^4
  // error of the second-derivative stencil on the bell.
  const SimilarityMap map = standard_map(Branch::CqBright, 0.0, 0.0, 0.0);
  const StationaryProfile profile{Branch::CqBright};
  ResidualLattice lattice;
  lattice.levels = 1;
  lattice.h0 = 2.5e-3;
  const auto report = pde_residual(map, profile, lattice);
  CHECK(report.levels[0].max_residual < 1e-8);
}

TEST_CASE("pde residual: mismatched potential plateaus at the analytic difference") {
  const SimilarityMap map = standard_map(Branch::CubicBright);
  const StationaryProfile profile{Branch::CubicBright};
  const ResidualLattice lattice;
  const auto report = pde_residual(map, profile, lattice, Branch::CubicDark);

  // oracle: residual = (v_dark - v_bright) psi, evaluated directly
  Real expected = 0.0;
  for (int j = 0; j < lattice.nt; ++j) {
    const Real t = lattice.t_min + (lattice.t_max - lattice.t_min) * j / (lattice.nt - 1);
    for (int i = 0; i < lattice.nx; ++i) {
      const Real x = lattice.x_min + (lattice.x_max - lattice.x_min) * i / (lattice.nx - 1);
      const Real dv = branch_potential(map, Branch::CubicDark, x, t) -
                      branch_potential(map, Branch::CubicBright, x, t);
      const Real amp = std::abs(assemble_wavefunction(map, profile, x, t));
      expected = std::max(expected, std::abs(dv) * amp);
    }
  }
  for (const auto& lv : report.levels) {
    CHECK(lv.max_residual == doctest::Approx(expected).epsilon(1e-3));
  }
  CHECK(report.levels.front().max_residual / report.levels.back().max_residual < 1.01);
}

TEST_CASE("temporal convergence: split-step is second order on cubic-bright") {
  Scenario s = default_scenario(Model::Cubic, SolitonType::Bright);
  s.time.t1 = 1.0;
  s.time.dt = 4e-3;
  const auto report = convergence_study(s, 3);
  REQUIRE(report.levels.size() == 3);
  CHECK(report.order_reliable);
  CHECK(*report.order == doctest::Approx(2.0).epsilon(0.1));
  // per-level analytic errors shrink ~4x as well (no spatial floor here)
  const Real r = report.levels[0].error_linf / report.levels[1].error_linf;
  CHECK(r > 3.5);
  CHECK(r < 4.5);
}

TEST_CASE("temporal convergence: crank-nicolson is second order on cubic-bright") {
  Scenario s = default_scenario(Model::Cubic, SolitonType::Bright);
  s.scheme = Scheme::CrankNicolson;
  s.boundary = BoundaryKind::AnalyticDirichlet;
  s.grid = Grid1D{-12.0, 12.0, 2001, false};
  s.time.t1 = 1.0;
  s.time.dt = 4e-3;
  const auto report = convergence_study(s, 3);
  CHECK(report.order_reliable);
  CHECK(*report.order == doctest::Approx(2.0).epsilon(0.1));
}

TEST_CASE("temporal convergence: free Gaussian under crank-nicolson, exact dispersive oracle") {
  // i psi_t = -psi_xx with psi0 = exp(-x^2/4): psi(x,t) = (1+it)^{-1/2} exp(-x^2/(4(1+it)))
  const Grid1D grid{-30.0, 30.0, 3001, false};
  const RealArray x = grid.points();
  const Real T = 1.0;
  const auto exact_at = [&](Real t) {
    const Complex a = 1.0 + Complex{0.0, 1.0} * t;
    ComplexArray out(grid.n);
    for (int i = 0; i < grid.n; ++i) out[i] = std::exp(-x[i] * x[i] / (4.0 * a)) / std::sqrt(a);
    return out;
  };
  const auto boundary = [&](Real xb, Real t) {
    const Complex a = 1.0 + Complex{0.0, 1.0} * t;
    return std::exp(-xb * xb / (4.0 * a)) / std::sqrt(a);
  };
  const auto run = [&](Real dt) {
    FieldState state{grid, 0.0, exact_at(0.0)};
    CrankNicolson cn{grid, dt, zero_coefficient(), boundary};
    const long steps = std::lround(T / dt);
    for (long k = 0; k < steps; ++k) cn.advance(state);
    return state.values;
  };
  const auto report = temporal_convergence(run, exact_at(T), 4e-3, 3);
  CHECK(report.order_reliable);
  CHECK(*report.order == doctest::Approx(2.0).epsilon(0.1));
}

TEST_CASE("temporal convergence: roundoff-floor runs are flagged unreliable") {
  // free evolution under split-step is exact in time; level differences sit
  // at roundoff and the order fit must not be trusted
  const Grid1D grid{-std::numbers::pi, std::numbers::pi, 64, true};
  const RealArray x = grid.points();
  ComplexArray psi0(grid.n);
  psi0.real() = (3.0 * x).cos();
  psi0.imag() = (3.0 * x).sin();
  const Real T = 0.1;
  const auto run = [&](Real dt) {
    FieldState state{grid, 0.0, psi0};
    SplitStepFourier stepper{grid, dt, zero_coefficient()};
    const long steps = std::lround(T / dt);
    for (long k = 0; k < steps; ++k) stepper.advance(state);
    return state.values;
  };
  ComplexArray exact(grid.n);
  const Complex rot = std::exp(Complex{0.0, -9.0 * T});
  for (int i = 0; i < grid.n; ++i) exact[i] = psi0[i] * rot;
  const auto report = temporal_convergence(run, exact, 4e-3, 3);
  CHECK(!report.order_reliable);
  for (const auto& lv : report.levels) CHECK(lv.error_linf < 1e-11);
}

TEST_CASE("lambda flip: analytic center ratio and localization (short run)") {
  Scenario s = default_scenario(Model::Cubic, SolitonType::Bright);
  s.time.t1 = 0.5;
  const SweepResult result = lambda_flip_study(s);
  REQUIRE(result.entries.size() == 2);
  CHECK(result.entries[0].value == -0.5);
  CHECK(result.entries[1].value == 0.5);
  for (const auto& check : result.checks) {
    INFO(check.name);
    CHECK(check.passed);
  }
  // u(0) = 0.5 vs 1.5: center density ratio exactly 3
  bool found = false;
  for (const auto& check : result.checks) {
    if (check.name == "center-density-ratio") {
      found = true;
      CHECK(check.observed == doctest::Approx(3.0).epsilon(1e-9));
    }
  }
  CHECK(found);
}

TEST_CASE("lambda flip: lambda = 0 is the identity") {
  Scenario s = default_scenario(Model::Cubic, SolitonType::Bright);
  s.lambda = 0.0;
  s.time.t1 = 0.2;
  const SweepResult result = lambda_flip_study(s);
  CHECK(result.entries.size() == 1);
  for (const auto& check : result.checks) {
    INFO(check.name);
    CHECK(check.passed);
  }
}

TEST_CASE("lambda flip: flips below the admissible range are rejected") {
  Scenario s = default_scenario(Model::Cubic, SolitonType::Bright);
  s.lambda = 1.5;  // mirrored value -1.5 <= -1
  CHECK_THROWS_AS(lambda_flip_study(s), std::invalid_argument);
}

TEST_CASE("parameter sweep: monotone values enforced, entries ordered") {
  Scenario s = default_scenario(Model::Cubic, SolitonType::Bright);
  s.time.t1 = 0.1;
  CHECK_THROWS_AS(parameter_sweep(s, "lambda", {0.5, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(parameter_sweep(s, "mu", {0.1}), std::invalid_argument);
  const SweepResult result = parameter_sweep(s, "alpha", {0.2, 0.0, 0.1});
  REQUIRE(result.entries.size() == 3);
  CHECK(result.entries[0].value == 0.0);
  CHECK(result.entries[2].value == 0.2);
  for (const auto& e : result.entries) CHECK(e.localized);
}

TEST_CASE("figure data: determinism, shapes, and id validation") {
  CHECK_THROWS_AS(figure_data(0), std::invalid_argument);
  CHECK_THROWS_AS(figure_data(8), std::invalid_argument);

  FigureParams small;
  small.nx = 41;
  small.nt = 21;
  const auto a = figure_data(4, small);
  const auto b = figure_data(4, small);
  REQUIRE(a.size() == 2);
  CHECK(a[0].name == "fig4a");
  CHECK(a[1].name == "fig4b");
  CHECK(to_csv(a[0]) == to_csv(b[0]));
  CHECK(to_csv(a[1]) == to_csv(b[1]));
  CHECK(a[0].values.rows() == 41 * 21);
}

TEST_CASE("figure 1: periodic panel repeats after 2pi, quasiperiodic does not") {
  FigureParams p;
  p.nt = 501;
  const auto tables = figure_data(1, p);
  REQUIRE(tables.size() == 2);
  const WidthProfile periodic{0.1, 0.0};
  const Real two_pi = 2.0 * std::numbers::pi;
  Real worst = 0.0;
  for (Eigen::Index r = 0; r < tables[0].values.rows(); ++r) {
    const Real t = tables[0].values(r, 0);
    if (t + two_pi > 50.0) break;
    worst = std::max(worst, std::abs(periodic.omega(t + two_pi) - tables[0].values(r, 1)));
  }
  CHECK(worst < 1e-10);

  const WidthProfile quasi{0.1, 0.1};
  Real dev = 0.0;
  for (Eigen::Index r = 0; r < tables[1].values.rows(); ++r) {
    const Real t = tables[1].values(r, 0);
    if (t + two_pi > 50.0) break;
    dev = std::max(dev, std::abs(quasi.omega(t + two_pi) - tables[1].values(r, 1)));
  }
  CHECK(dev > 1e-4);
}

TEST_CASE("figure 5: dark density vanishes at x=0 for all t") {
  FigureParams small;
  small.nx = 81;
  small.nt = 41;
  const auto tables = figure_data(5, small);
  for (const Table& table : tables) {
    for (int it = 0; it < table.nt; ++it) {
      const RealArray x = surface_row(table, it, 0);
      const RealArray density = surface_row(table, it, 2);
      Eigen::Index center;
      x.abs().minCoeff(&center);
      CHECK(density[center] < 1e-10);
      CHECK(single_notch_at_center(x, density, 1e-10));
    }
  }
}

TEST_CASE("figure 2: quadratic tail coefficient flips sign with omega") {
  FigureParams small;
  small.nx = 201;
  small.nt = 101;
  const auto tables = figure_data(2, small);
  const WidthProfile width{0.1, 0.0};
  for (const Table& table : tables) {
    for (int it = 0; it < table.nt; ++it) {
      const Real t = table.values(static_cast<Eigen::Index>(it) * table.nx, 1);
      const Real omega = width.omega(t);
      if (std::abs(omega) < 1e-6) continue;
      const RealArray x = surface_row(table, it, 0);
      const RealArray v = surface_row(table, it, 2);
      const Real coeff = quadratic_tail_coefficient(x, v);
      CHECK(coeff * omega > 0.0);
      CHECK(coeff == doctest::Approx(omega).epsilon(1e-6));
    }
  }
}

TEST_CASE("density shape helpers") {
  RealArray x = RealArray::LinSpaced(101, -5.0, 5.0);
  RealArray bump = (-x.square()).exp();
  CHECK(single_peak(bump));
  CHECK(count_local_maxima(bump, 0.01) == 1);

  RealArray two = (-(x - 2.0).square()).exp() + (-(x + 2.0).square()).exp();
  CHECK(!single_peak(two));

  RealArray notch = 1.0 - (-x.square()).exp();
  CHECK(single_notch_at_center(x, notch, 1e-10));
  RealArray offset_notch = 1.0 - (-(x - 1.0).square()).exp();
  CHECK(!single_notch_at_center(x, offset_notch, 1e-10));
}

TEST_CASE("verification suites: stationary, identity and constraint checks pass") {
  for (const auto& check : verify_stationary_suite()) {
    INFO(check.name);
    CHECK(check.passed);
  }
  for (const auto& check : verify_identity_suite()) {
    INFO(check.name);
    CHECK(check.passed);
  }
  for (const auto& check : verify_constraint_suite()) {
    INFO(check.name);
    CHECK(check.passed);
  }
}

TEST_CASE("verification suite: pde residual ratios for all four branches") {
  for (const auto& check : verify_pde_residual_suite()) {
    INFO(check.name);
    CHECK(check.passed);
  }
}
