#pragma once

// Scenario: a complete, serializable experiment description. The JSON schema
// accepts exactly the keys below; unknown keys are rejected and every
// invariant violation carries a machine-readable code and a field path.
//
// {
//   "model":  "cubic" | "cubic-quintic",
//   "branch": "bright" | "dark",
//   "lambda": number,            // > -1
//   "alpha":  number,
//   "beta":   number,
//   "couplings": {"mu": number, "g_odd": [G3, ...]},
//   "grid":   {"x_min": number, "x_max": number, "n": integer},
//   "time":   {"t0": number, "t1": number, "dt": number, "snapshot_stride": integer},
//   "scheme": "split-step-fourier" | "crank-nicolson",
//   "boundary": "periodic" | "analytic-dirichlet",
//   "seed_perturbation": number  // optional, relative amplitude
// }
//
// Only "model" and "branch" are required; everything else is defaulted to the
// standard parameter set of the corresponding branch.

#include <nlse/grid.hpp>
#include <nlse/similarity.hpp>

#include <optional>
#include <string>

namespace nlse {

enum class Model { Cubic, CubicQuintic };
enum class SolitonType { Bright, Dark };

struct TimeGrid {
  Real t0 = 0.0;
  Real t1 = 20.0;
  Real dt = 1e-3;
  int snapshot_stride = 200;

  friend bool operator==(const TimeGrid&, const TimeGrid&) = default;
};

struct Scenario {
  Model model;
  SolitonType soliton;
  Real lambda;
  Real alpha;
  Real beta;
  CouplingConstants couplings;
  Grid1D grid;
  TimeGrid time;
  Scheme scheme;
  BoundaryKind boundary;
  std::optional<Real> seed_perturbation;

  Branch kind() const {
    if (model == Model::Cubic)
      return soliton == SolitonType::Bright ? Branch::CubicBright : Branch::CubicDark;
    return soliton == SolitonType::Bright ? Branch::CqBright : Branch::CqDark;
  }

  SimilarityMap make_map() const {
    return {WidthProfile{alpha, beta}, ModulationShape{lambda}, couplings};
  }
  StationaryProfile make_profile() const { return StationaryProfile{kind()}; }
  EvolverConfig evolver_config() const { return {scheme, time.dt, boundary, time.snapshot_stride}; }

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

struct ScenarioError : std::runtime_error {
  std::string code;  // stable machine-readable identifier
  std::string path;  // offending field, e.g. "time.dt"
  ScenarioError(std::string code_, std::string path_, const std::string& message);
};

// Standard scenario of a branch: paper parameter set (lambda = 0.5,
// alpha = 0.1, beta = 0, canonical couplings), default grid and scheme.
Scenario default_scenario(Model model, SolitonType soliton);

Scenario parse_scenario(const std::string& json_text);
std::string serialize_scenario(const Scenario& scenario);

const char* model_name(Model m);
const char* soliton_name(SolitonType s);
const char* scheme_name(Scheme s);
const char* boundary_name(BoundaryKind b);

}  // namespace nlse
