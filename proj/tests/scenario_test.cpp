#include <doctest.h>

#include <nlse/scenario.hpp>

using namespace nlse;

namespace {

std::string code_of(const std::string& text) {
  try {
    parse_scenario(text);
  } catch (const ScenarioError& e) {
    return e.code;
  }
  return "";
}

}  // namespace

TEST_CASE("parse: minimal document gets the full default parameter set") {
  const Scenario s = parse_scenario(R"({"model": "cubic", "branch": "bright"})");
  CHECK(s.model == Model::Cubic);
  CHECK(s.soliton == SolitonType::Bright);
  CHECK(s.lambda == 0.5);
  CHECK(s.alpha == 0.1);
  CHECK(s.beta == 0.0);
  CHECK(s.couplings == CouplingConstants{-1.0, {-2.0}});
  CHECK(s.grid.x_min == -40.0);
  CHECK(s.grid.x_max == 40.0);
  CHECK(s.grid.n == 2048);
  CHECK(s.grid.periodic);
  CHECK(s.scheme == Scheme::SplitStepFourier);
  CHECK(s.boundary == BoundaryKind::Periodic);
  CHECK(s.time.t0 == 0.0);
  CHECK(s.time.t1 == 20.0);
  CHECK(s.time.dt == 1e-3);
  CHECK(!s.seed_perturbation);
  CHECK(s.kind() == Branch::CubicBright);
}

TEST_CASE("parse: dark defaults to crank-nicolson on a bounded grid") {
  const Scenario s = parse_scenario(R"({"model": "cubic-quintic", "branch": "dark"})");
  CHECK(s.scheme == Scheme::CrankNicolson);
  CHECK(s.boundary == BoundaryKind::AnalyticDirichlet);
  CHECK(!s.grid.periodic);
  CHECK(s.grid.x_min == -12.0);
  CHECK(s.grid.n == 2001);
  CHECK(s.couplings == CouplingConstants{3.0, {6.0, -3.0}});
  CHECK(s.kind() == Branch::CqDark);
}

TEST_CASE("parse: cq-bright defaults to crank-nicolson (algebraic tails)") {
  const Scenario s = parse_scenario(R"({"model": "cubic-quintic", "branch": "bright"})");
  CHECK(s.scheme == Scheme::CrankNicolson);
  CHECK(s.boundary == BoundaryKind::AnalyticDirichlet);
  CHECK(!s.grid.periodic);
}

TEST_CASE("parse: scheme override re-derives boundary and grid layout") {
  const Scenario s =
      parse_scenario(R"({"model": "cubic", "branch": "bright", "scheme": "crank-nicolson"})");
  CHECK(s.scheme == Scheme::CrankNicolson);
  CHECK(s.boundary == BoundaryKind::AnalyticDirichlet);
  CHECK(!s.grid.periodic);
}

TEST_CASE("parse: rejections carry machine-readable codes and field paths") {
  CHECK(code_of("ceci n'est pas du json") == "malformed-document");
  CHECK(code_of(R"({"model": "cubic"})") == "missing-field");
  CHECK(code_of(R"({"model": "quartic", "branch": "bright"})") == "invalid-enum");
  CHECK(code_of(R"({"model": "cubic", "branch": "bright", "frobnicate": 1})") == "unknown-key");
  CHECK(code_of(R"({"model": "cubic", "branch": "bright", "lambda": -1.5})") == "lambda-range");
  CHECK(code_of(R"({"model": "cubic", "branch": "bright", "lambda": -1.0})") == "lambda-range");
  CHECK(code_of(R"({"model": "cubic", "branch": "dark", "scheme": "split-step-fourier"})") ==
        "scheme-boundary-incompatible");
  CHECK(code_of(R"({"model": "cubic", "branch": "bright", "grid": {"n": 1000}})") ==
        "grid-not-power-of-two");
  CHECK(code_of(R"({"model": "cubic", "branch": "bright", "grid": {"x_min": 5, "x_max": -5}})") ==
        "grid-extent");
  CHECK(code_of(R"({"model": "cubic", "branch": "bright", "time": {"t1": -1}})") == "time-order");
  CHECK(code_of(R"({"model": "cubic", "branch": "bright", "time": {"dt": 0}})") == "dt-nonpositive");
  CHECK(code_of(R"({"model": "cubic", "branch": "bright", "couplings": {"mu": 7}})") ==
        "couplings-profile-mismatch");
  CHECK(code_of(R"({"model": "cubic", "branch": "bright", "couplings": {"g_odd": [0]}})") ==
        "couplings-invalid");
  CHECK(code_of(R"({"model": "cubic", "branch": "bright", "seed_perturbation": -0.5})") ==
        "perturbation-range");
  CHECK(code_of(R"({"model": "cubic", "branch": "bright", "lambda": "big"})") == "invalid-type");

  try {
    parse_scenario(R"({"model": "cubic", "branch": "bright", "time": {"dt": 0}})");
    CHECK(false);
  } catch (const ScenarioError& e) {
    CHECK(e.path == "time.dt");
  }
}

TEST_CASE("parse: nested unknown keys are rejected too") {
  CHECK(code_of(R"({"model": "cubic", "branch": "bright", "grid": {"spacing": 0.1}})") ==
        "unknown-key");
  CHECK(code_of(R"({"model": "cubic", "branch": "bright", "time": {"T": 10}})") == "unknown-key");
  CHECK(code_of(R"({"model": "cubic", "branch": "bright", "couplings": {"g3": -2}})") ==
        "unknown-key");
}

TEST_CASE("round-trip: parse(serialize(s)) == s") {
  Scenario s = default_scenario(Model::CubicQuintic, SolitonType::Dark);
  s.lambda = 0.1;  // a value with no finite binary expansion
  s.alpha = 0.07;
  s.beta = 0.013;
  s.time.dt = 0.0007;
  s.seed_perturbation = 0.01;
  const std::string text = serialize_scenario(s);
  const Scenario back = parse_scenario(text);
  CHECK(back == s);
  CHECK(serialize_scenario(back) == text);

  const Scenario minimal = parse_scenario(R"({"model": "cubic", "branch": "bright"})");
  CHECK(parse_scenario(serialize_scenario(minimal)) == minimal);
}

TEST_CASE("explicit canonical couplings are accepted") {
  const Scenario s = parse_scenario(
      R"({"model": "cubic", "branch": "bright", "couplings": {"mu": -1, "g_odd": [-2]}})");
  CHECK(s.couplings == CouplingConstants{-1.0, {-2.0}});
}
