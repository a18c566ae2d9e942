#include <doctest.h>

#include <nlse/profiles.hpp>

#include "oracles.hpp"

#include <cmath>

using namespace nlse;

namespace {
const Branch kAll[] = {Branch::CubicBright, Branch::CubicDark, Branch::CqBright, Branch::CqDark};
}

TEST_CASE("profiles: values and derivatives at zeta=0") {
  const StationaryProfile sech{Branch::CubicBright};
  auto d = sech.eval(0.0);
  CHECK(d.value == 1.0);
  CHECK(d.d1 == 0.0);
  CHECK(d.d2 == -1.0);

  const StationaryProfile tanh{Branch::CubicDark};
  d = tanh.eval(0.0);
  CHECK(d.value == 0.0);
  CHECK(d.d1 == 1.0);
  CHECK(d.d2 == 0.0);

  const StationaryProfile bell{Branch::CqBright};
  d = bell.eval(0.0);
  CHECK(d.value == 1.0);
  CHECK(d.d1 == 0.0);

  const StationaryProfile kink{Branch::CqDark};
  d = kink.eval(0.0);
  CHECK(d.value == 0.0);
  CHECK(d.d1 == 1.0);
}

TEST_CASE("profiles: bell at zeta=1 satisfies its own equation") {
  const StationaryProfile bell{Branch::CqBright};
  const auto d = bell.eval(1.0);
  CHECK(d.value == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  // phi'' = 2 phi^3 - 3 phi^5 at the exact solution
  const Real expected = 2.0 * std::pow(2.0, -1.5) - 3.0 * std::pow(2.0, -2.5);
  CHECK(d.d2 == doctest::Approx(expected).epsilon(1e-14));
  const auto value = [&](Real z) { return bell.value(z); };
  CHECK(oracle::d2_o4(value, 1.0, 1e-3) == doctest::Approx(d.d2).epsilon(1e-8));
}

TEST_CASE("profiles: analytic derivatives match 4th-order differences") {
  for (Branch b : kAll) {
    const StationaryProfile p{b};
    const auto value = [&](Real z) { return p.value(z); };
    for (Real z = -5.0; z <= 5.0; z += 0.5) {
      const auto d = p.eval(z);
      CHECK(oracle::d1_o4(value, z, 1e-3) == doctest::Approx(d.d1).epsilon(1e-9));
      CHECK(oracle::d2_o4(value, z, 1e-3) == doctest::Approx(d.d2).epsilon(1e-7));
    }
  }
}

TEST_CASE("profiles: parity") {
  const StationaryProfile sech{Branch::CubicBright};
  const StationaryProfile bell{Branch::CqBright};
  const StationaryProfile tanh{Branch::CubicDark};
  const StationaryProfile kink{Branch::CqDark};
  for (Real z = 0.0; z <= 8.0; z += 0.37) {
    CHECK(std::abs(sech.value(-z) - sech.value(z)) < 1e-14);
    CHECK(std::abs(bell.value(-z) - bell.value(z)) < 1e-14);
    CHECK(std::abs(tanh.value(-z) + tanh.value(z)) < 1e-14);
    CHECK(std::abs(kink.value(-z) + kink.value(z)) < 1e-14);
  }
}

TEST_CASE("profiles: asymptotics") {
  const StationaryProfile sech{Branch::CubicBright};
  const StationaryProfile bell{Branch::CqBright};
  const StationaryProfile tanh{Branch::CubicDark};
  const StationaryProfile kink{Branch::CqDark};
  CHECK(std::abs(sech.value(40.0)) < 1e-15);
  CHECK(std::abs(bell.value(1e8)) < 1e-7);
  CHECK(std::abs(std::abs(tanh.value(40.0)) - 1.0) < 1e-15);
  CHECK(std::abs(std::abs(kink.value(-1e8)) - 1.0) < 1e-14);
}

TEST_CASE("stationary residual: machine-precision zero for all four kinds") {
  const RealArray samples = default_residual_samples();
  REQUIRE(samples.size() == 1001);
  CHECK(samples[0] == -10.0);
  CHECK(samples[1000] == 10.0);
  for (Branch b : kAll) {
    CHECK(stationary_residual(StationaryProfile{b}, samples) < 1e-12);
  }
}

TEST_CASE("stationary residual: perturbed eigenvalue is detected") {
  const StationaryProfile sech{Branch::CubicBright};
  const RealArray samples = default_residual_samples();
  // residual of the perturbed equation equals |dmu * Phi|, max 0.1 at zeta=0
  const Real res = reduced_equation_residual(-1.1, sech.g3(), sech.g5(), sech, samples);
  CHECK(res >= 0.05);
  CHECK(res == doctest::Approx(0.1).epsilon(1e-10));
}

TEST_CASE("profiles: couplings tuples") {
  CHECK(branch_couplings(Branch::CubicBright) == CouplingConstants{-1.0, {-2.0}});
  CHECK(branch_couplings(Branch::CubicDark) == CouplingConstants{2.0, {2.0}});
  CHECK(branch_couplings(Branch::CqBright) == CouplingConstants{0.0, {2.0, -3.0}});
  CHECK(branch_couplings(Branch::CqDark) == CouplingConstants{3.0, {6.0, -3.0}});
  CHECK(StationaryProfile{Branch::CqDark}.bright() == false);
  CHECK(StationaryProfile{Branch::CqBright}.bright() == true);
}
