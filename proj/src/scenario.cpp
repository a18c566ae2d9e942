#include <nlse/scenario.hpp>

#include <json.hpp>

#include <set>

namespace nlse {

using json = nlohmann::ordered_json;

ScenarioError::ScenarioError(std::string code_, std::string path_, const std::string& message)
    : std::runtime_error(path_.empty() ? code_ + ": " + message
                                       : code_ + " at '" + path_ + "': " + message),
      code(std::move(code_)),
      path(std::move(path_)) {}

const char* model_name(Model m) { return m == Model::Cubic ? "cubic" : "cubic-quintic"; }
const char* soliton_name(SolitonType s) { return s == SolitonType::Bright ? "bright" : "dark"; }
const char* scheme_name(Scheme s) {
  return s == Scheme::SplitStepFourier ? "split-step-fourier" : "crank-nicolson";
}
const char* boundary_name(BoundaryKind b) {
  return b == BoundaryKind::Periodic ? "periodic" : "analytic-dirichlet";
}

Scenario default_scenario(Model model, SolitonType soliton) {
  // The sech soliton decays exponentially, so the spectral scheme applies on
  // a wide periodic box. Everything else lives on a bounded window with
  // analytic Dirichlet values: the dark backgrounds never decay, and the cq
  // bell decays only algebraically (1/zeta), which no affordable periodic box
  // accommodates. The window [-12, 12] keeps the boundary-region quadratic
  // phase omega x^2 small; wider windows visibly degrade the Crank-Nicolson
  // phase accuracy at the default dt.
  const bool spectral = model == Model::Cubic && soliton == SolitonType::Bright;
  const Scheme scheme = spectral ? Scheme::SplitStepFourier : Scheme::CrankNicolson;
  const BoundaryKind boundary = spectral ? BoundaryKind::Periodic : BoundaryKind::AnalyticDirichlet;
  Grid1D grid = spectral ? Grid1D{-40.0, 40.0, 2048, true} : Grid1D{-12.0, 12.0, 2001, false};
  Branch kind = model == Model::Cubic
                    ? (soliton == SolitonType::Bright ? Branch::CubicBright : Branch::CubicDark)
                    : (soliton == SolitonType::Bright ? Branch::CqBright : Branch::CqDark);
  return Scenario{model,
                  soliton,
                  0.5,  // lambda
                  0.1,  // alpha
                  0.0,  // beta
                  branch_couplings(kind),
                  grid,
                  TimeGrid{},
                  scheme,
                  boundary,
                  std::nullopt};
}

namespace {

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& prefix) {
  for (const auto& item : obj.items()) {
    if (!allowed.contains(item.key()))
      throw ScenarioError("unknown-key", prefix + item.key(), "unknown key");
  }
}

Real require_number(const json& obj, const std::string& key, const std::string& path, Real fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number()) throw ScenarioError("invalid-type", path, "expected a number");
  return v.get<Real>();
}

int require_integer(const json& obj, const std::string& key, const std::string& path, int fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number_integer()) throw ScenarioError("invalid-type", path, "expected an integer");
  return v.get<int>();
}

std::string require_string(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.contains(key)) throw ScenarioError("missing-field", path, "required field");
  const json& v = obj.at(key);
  if (!v.is_string()) throw ScenarioError("invalid-type", path, "expected a string");
  return v.get<std::string>();
}

}  // namespace

Scenario parse_scenario(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ScenarioError("malformed-document", "", e.what());
  }
  if (!doc.is_object()) throw ScenarioError("malformed-document", "", "top level must be an object");

  reject_unknown_keys(doc,
                      {"model", "branch", "lambda", "alpha", "beta", "couplings", "grid", "time",
                       "scheme", "boundary", "seed_perturbation"},
                      "");

  const std::string model_str = require_string(doc, "model", "model");
  Model model;
  if (model_str == "cubic")
    model = Model::Cubic;
  else if (model_str == "cubic-quintic")
    model = Model::CubicQuintic;
  else
    throw ScenarioError("invalid-enum", "model", "expected 'cubic' or 'cubic-quintic'");

  const std::string branch_str = require_string(doc, "branch", "branch");
  SolitonType soliton;
  if (branch_str == "bright")
    soliton = SolitonType::Bright;
  else if (branch_str == "dark")
    soliton = SolitonType::Dark;
  else
    throw ScenarioError("invalid-enum", "branch", "expected 'bright' or 'dark'");

  Scenario sc = default_scenario(model, soliton);

  sc.lambda = require_number(doc, "lambda", "lambda", sc.lambda);
  sc.alpha = require_number(doc, "alpha", "alpha", sc.alpha);
  sc.beta = require_number(doc, "beta", "beta", sc.beta);

  if (doc.contains("scheme")) {
    const std::string s = require_string(doc, "scheme", "scheme");
    if (s == "split-step-fourier")
      sc.scheme = Scheme::SplitStepFourier;
    else if (s == "crank-nicolson")
      sc.scheme = Scheme::CrankNicolson;
    else
      throw ScenarioError("invalid-enum", "scheme", "expected 'split-step-fourier' or 'crank-nicolson'");
    // boundary and grid layout follow the scheme unless given explicitly
    sc.boundary = sc.scheme == Scheme::SplitStepFourier ? BoundaryKind::Periodic
                                                        : BoundaryKind::AnalyticDirichlet;
  }
  if (doc.contains("boundary")) {
    const std::string b = require_string(doc, "boundary", "boundary");
    if (b == "periodic")
      sc.boundary = BoundaryKind::Periodic;
    else if (b == "analytic-dirichlet")
      sc.boundary = BoundaryKind::AnalyticDirichlet;
    else
      throw ScenarioError("invalid-enum", "boundary", "expected 'periodic' or 'analytic-dirichlet'");
  }

  if (doc.contains("couplings")) {
    const json& c = doc.at("couplings");
    if (!c.is_object()) throw ScenarioError("invalid-type", "couplings", "expected an object");
    reject_unknown_keys(c, {"mu", "g_odd"}, "couplings.");
    const Real mu = require_number(c, "mu", "couplings.mu", sc.couplings.mu());
    std::vector<Real> g_odd = sc.couplings.g_odd();
    if (c.contains("g_odd")) {
      const json& g = c.at("g_odd");
      if (!g.is_array() || g.empty())
        throw ScenarioError("couplings-invalid", "couplings.g_odd", "expected a nonempty array");
      g_odd.clear();
      for (const auto& v : g) {
        if (!v.is_number())
          throw ScenarioError("invalid-type", "couplings.g_odd", "expected numbers");
        g_odd.push_back(v.get<Real>());
      }
    }
    if (g_odd.front() == 0.0)
      throw ScenarioError("couplings-invalid", "couplings.g_odd", "G_3 must be nonzero");
    sc.couplings = CouplingConstants{mu, std::move(g_odd)};
  }

  if (doc.contains("grid")) {
    const json& g = doc.at("grid");
    if (!g.is_object()) throw ScenarioError("invalid-type", "grid", "expected an object");
    reject_unknown_keys(g, {"x_min", "x_max", "n"}, "grid.");
    const Real x_min = require_number(g, "x_min", "grid.x_min", sc.grid.x_min);
    const Real x_max = require_number(g, "x_max", "grid.x_max", sc.grid.x_max);
    const int n = require_integer(g, "n", "grid.n", sc.grid.n);
    if (!(x_max > x_min)) throw ScenarioError("grid-extent", "grid.x_max", "x_max must exceed x_min");
    if (n < 16) throw ScenarioError("grid-size", "grid.n", "need at least 16 points");
    sc.grid = Grid1D{x_min, x_max, n, sc.boundary == BoundaryKind::Periodic};
  } else {
    // keep the default extent, but the layout must match the boundary kind
    sc.grid = Grid1D{sc.grid.x_min, sc.grid.x_max, sc.grid.n,
                     sc.boundary == BoundaryKind::Periodic};
  }

  if (doc.contains("time")) {
    const json& t = doc.at("time");
    if (!t.is_object()) throw ScenarioError("invalid-type", "time", "expected an object");
    reject_unknown_keys(t, {"t0", "t1", "dt", "snapshot_stride"}, "time.");
    sc.time.t0 = require_number(t, "t0", "time.t0", sc.time.t0);
    sc.time.t1 = require_number(t, "t1", "time.t1", sc.time.t1);
    sc.time.dt = require_number(t, "dt", "time.dt", sc.time.dt);
    sc.time.snapshot_stride = require_integer(t, "snapshot_stride", "time.snapshot_stride",
                                              sc.time.snapshot_stride);
  }

  if (doc.contains("seed_perturbation")) {
    const json& v = doc.at("seed_perturbation");
    if (!v.is_number()) throw ScenarioError("invalid-type", "seed_perturbation", "expected a number");
    sc.seed_perturbation = v.get<Real>();
  }

  // invariants
  if (!(sc.lambda > -1.0))
    throw ScenarioError("lambda-range", "lambda", "lambda must be > -1 (modulation must stay positive)");
  if (!(sc.time.t1 > sc.time.t0))
    throw ScenarioError("time-order", "time.t1", "t1 must exceed t0");
  if (!(sc.time.dt > 0)) throw ScenarioError("dt-nonpositive", "time.dt", "dt must be positive");
  if (sc.time.snapshot_stride < 1)
    throw ScenarioError("stride-invalid", "time.snapshot_stride", "snapshot_stride must be >= 1");
  if (sc.soliton == SolitonType::Dark && sc.scheme == Scheme::SplitStepFourier)
    throw ScenarioError("scheme-boundary-incompatible", "scheme",
                        "dark branches have a non-decaying background; periodic split-step does not apply");
  if (sc.scheme == Scheme::SplitStepFourier && sc.boundary != BoundaryKind::Periodic)
    throw ScenarioError("scheme-boundary-incompatible", "boundary",
                        "split-step-fourier requires periodic boundary");
  if (sc.scheme == Scheme::CrankNicolson && sc.boundary != BoundaryKind::AnalyticDirichlet)
    throw ScenarioError("scheme-boundary-incompatible", "boundary",
                        "crank-nicolson requires analytic-dirichlet boundary");
  if (sc.scheme == Scheme::SplitStepFourier && !is_power_of_two(sc.grid.n))
    throw ScenarioError("grid-not-power-of-two", "grid.n",
                        "split-step-fourier needs a power-of-two point count");
  if (!(sc.couplings == branch_couplings(sc.kind())))
    throw ScenarioError("couplings-profile-mismatch", "couplings",
                        std::string("this model/branch admits only the exact tuple of ") +
                            branch_name(sc.kind()));
  if (sc.seed_perturbation && (*sc.seed_perturbation < 0.0 || *sc.seed_perturbation > 1.0))
    throw ScenarioError("perturbation-range", "seed_perturbation",
                        "relative amplitude must lie in [0, 1]");

  return sc;
}

std::string serialize_scenario(const Scenario& sc) {
  json doc;
  doc["model"] = model_name(sc.model);
  doc["branch"] = soliton_name(sc.soliton);
  doc["lambda"] = sc.lambda;
  doc["alpha"] = sc.alpha;
  doc["beta"] = sc.beta;
  doc["couplings"] = {{"mu", sc.couplings.mu()}, {"g_odd", sc.couplings.g_odd()}};
  doc["grid"] = {{"x_min", sc.grid.x_min}, {"x_max", sc.grid.x_max}, {"n", sc.grid.n}};
  doc["time"] = {{"t0", sc.time.t0},
                 {"t1", sc.time.t1},
                 {"dt", sc.time.dt},
                 {"snapshot_stride", sc.time.snapshot_stride}};
  doc["scheme"] = scheme_name(sc.scheme);
  doc["boundary"] = boundary_name(sc.boundary);
  if (sc.seed_perturbation) doc["seed_perturbation"] = *sc.seed_perturbation;
  return doc.dump(2) + "\n";
}

}  // namespace nlse
