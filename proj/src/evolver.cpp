#include <nlse/evolver.hpp>
#include <nlse/numerics.hpp>

#include <cmath>

namespace nlse {

namespace {

class SimilarityCoefficient final : public LocalCoefficient {
 public:
  explicit SimilarityCoefficient(SimilarityMap map) : map_(std::move(map)) {}

  void prepare(const RealArray& x, Real t) override {
    v_ = map_.potential(x, t);
    const int orders = map_.couplings().order_count();
    g_.resize(static_cast<size_t>(orders));
    for (int n = 1; n <= orders; ++n) g_[static_cast<size_t>(n - 1)] = map_.nonlinearity(n, x, t);
  }

  RealArray apply(const RealArray& density) const override {
    RealArray w = v_;
    RealArray dpow = density;
    for (size_t i = 0; i < g_.size(); ++i) {
      w += g_[i] * dpow;
      if (i + 1 < g_.size()) dpow *= density;
    }
    return w;
  }

 private:
  SimilarityMap map_;
  RealArray v_;
  std::vector<RealArray> g_;
};

class ZeroCoefficient final : public LocalCoefficient {
 public:
  void prepare(const RealArray& x, Real) override { size_ = x.size(); }
  RealArray apply(const RealArray&) const override { return RealArray::Zero(size_); }

 private:
  Eigen::Index size_ = 0;
};

}  // namespace

std::unique_ptr<LocalCoefficient> similarity_coefficient(const SimilarityMap& map) {
  return std::make_unique<SimilarityCoefficient>(map);
}

std::unique_ptr<LocalCoefficient> zero_coefficient() { return std::make_unique<ZeroCoefficient>(); }

BoundaryFn analytic_boundary(const SimilarityMap& map, const StationaryProfile& profile) {
  return [map, profile](Real x, Real t) { return assemble_wavefunction(map, profile, x, t); };
}

SplitStepFourier::SplitStepFourier(const Grid1D& grid, Real dt, std::shared_ptr<LocalCoefficient> w)
    : grid_(grid), dt_(dt), w_(std::move(w)) {
  if (!grid_.periodic) throw std::invalid_argument("split-step: periodic grid required");
  if (dt_ == 0) throw std::invalid_argument("split-step: dt must be nonzero");
  x_ = grid_.points();
  k2_ = grid_.wavenumbers().square();
  kin_half_ = half_factor(dt_);
  freq_.resize(grid_.n);
}

ComplexArray SplitStepFourier::half_factor(Real dt) const {
  const RealArray angle = -0.5 * dt * k2_;
  ComplexArray f(k2_.size());
  f.real() = angle.cos();
  f.imag() = angle.sin();
  return f;
}

void SplitStepFourier::kinetic_half(ComplexArray& psi, const ComplexArray& factor) {
  fft_.fwd(freq_.data(), psi.data(), grid_.n);
  freq_ *= factor;
  fft_.inv(psi.data(), freq_.data(), grid_.n);
}

void SplitStepFourier::advance(FieldState& state) { advance(state, dt_); }

void SplitStepFourier::advance(FieldState& state, Real dt_override) {
  if (state.grid != grid_) throw std::invalid_argument("split-step: state on a different grid");
  const bool standard = dt_override == dt_;
  const ComplexArray factor = standard ? kin_half_ : half_factor(dt_override);

  kinetic_half(state.values, factor);

  w_->prepare(x_, state.t + 0.5 * dt_override);
  const RealArray w = w_->apply(state.values.abs2());
  const RealArray angle = -dt_override * w;
  ComplexArray rot(angle.size());
  rot.real() = angle.cos();
  rot.imag() = angle.sin();
  state.values *= rot;

  kinetic_half(state.values, factor);

  state.t += dt_override;
  ++steps_done_;
  if (!state.finite()) throw StepFailure(steps_done_ - 1);
}

CrankNicolson::CrankNicolson(const Grid1D& grid, Real dt, std::shared_ptr<LocalCoefficient> w,
                             BoundaryFn boundary, int max_iterations, Real tolerance)
    : grid_(grid),
      dt_(dt),
      w_(std::move(w)),
      boundary_(std::move(boundary)),
      max_iterations_(max_iterations),
      tolerance_(tolerance) {
  if (grid_.periodic) throw std::invalid_argument("crank-nicolson: bounded grid required");
  if (dt_ == 0) throw std::invalid_argument("crank-nicolson: dt must be nonzero");
  x_ = grid_.points();
  const Real h = grid_.spacing();
  inv_h2_ = 1.0 / (h * h);
  const int n = grid_.n;
  lower_.resize(n);
  diag_.resize(n);
  upper_.resize(n);
  rhs_.resize(n);
  next_.resize(n);
  prev_iter_.resize(n);
  scratch_.resize(n);
}

void CrankNicolson::advance(FieldState& state) { advance(state, dt_); }

void CrankNicolson::advance(FieldState& state, Real dt_override) {
  if (state.grid != grid_) throw std::invalid_argument("crank-nicolson: state on a different grid");
  const int n = grid_.n;
  const Real t = state.t;
  const Real sigma = 0.5 * dt_override;
  const Complex i_sigma{0.0, sigma};

  w_->prepare(x_, t + 0.5 * dt_override);
  const ComplexArray& psi = state.values;
  RealArray density = psi.abs2();

  const Complex left = boundary_(x_[0], t + dt_override);
  const Complex right = boundary_(x_[n - 1], t + dt_override);

  bool converged = false;
  for (int it = 0; it < max_iterations_ && !converged; ++it) {
    const RealArray w = w_->apply(density);

    // (1 + i sigma H) psi_next = (1 - i sigma H) psi, H = -D2 + diag(w),
    // with the boundary rows replaced by the pinned Dirichlet values.
    for (int j = 1; j < n - 1; ++j) {
      lower_[j] = -i_sigma * inv_h2_;
      upper_[j] = -i_sigma * inv_h2_;
      diag_[j] = Complex{1.0, 0.0} + i_sigma * (2.0 * inv_h2_ + w[j]);
      const Complex lap = (psi[j + 1] - 2.0 * psi[j] + psi[j - 1]) * inv_h2_;
      rhs_[j] = psi[j] - i_sigma * (-lap + w[j] * psi[j]);
    }
    diag_[0] = diag_[n - 1] = Complex{1.0, 0.0};
    upper_[0] = lower_[n - 1] = Complex{0.0, 0.0};
    lower_[0] = upper_[n - 1] = Complex{0.0, 0.0};
    rhs_[0] = left;
    rhs_[n - 1] = right;

    tridiagonal_solve(lower_, diag_, upper_, rhs_, scratch_);

    if (it > 0) {
      const Real increment = (scratch_ - next_).abs().maxCoeff();
      converged = increment < tolerance_;
    }
    next_ = scratch_;
    density = (0.5 * (psi + next_)).abs2();  // half-step density for the corrector
  }

  state.values = next_;
  state.t += dt_override;
  ++steps_done_;
  if (!state.finite()) throw StepFailure(steps_done_ - 1);
}

void tridiagonal_solve(const ComplexArray& lower, const ComplexArray& diag,
                       const ComplexArray& upper, const ComplexArray& rhs, ComplexArray& out) {
  const Eigen::Index n = diag.size();
  ComplexArray c(n), d(n);
  c[0] = upper[0] / diag[0];
  d[0] = rhs[0] / diag[0];
  for (Eigen::Index i = 1; i < n; ++i) {
    const Complex m = diag[i] - lower[i] * c[i - 1];
    c[i] = upper[i] / m;
    d[i] = (rhs[i] - lower[i] * d[i - 1]) / m;
  }
  out.resize(n);
  out[n - 1] = d[n - 1];
  for (Eigen::Index i = n - 2; i >= 0; --i) out[i] = d[i] - c[i] * out[i + 1];
}

Observables compute_observables(const FieldState& state, const ComplexArray& reference) {
  if (reference.size() != state.values.size())
    throw std::invalid_argument("observables: reference sampled on a different grid");
  const Grid1D& grid = state.grid;
  const Real h = grid.spacing();
  const RealArray x = grid.points();
  const RealArray density = state.values.abs2();

  // trapezoid weights; on a periodic grid all weights are h
  RealArray wt = RealArray::Constant(grid.n, h);
  if (!grid.periodic) {
    wt[0] *= 0.5;
    wt[grid.n - 1] *= 0.5;
  }

  Observables out{};
  out.norm = (wt * density).sum();
  out.peak = density.maxCoeff();
  if (out.norm > 0) {
    out.centroid = (wt * x * density).sum() / out.norm;
    out.width = std::sqrt((wt * (x - out.centroid).square() * density).sum() / out.norm);
  } else {
    out.centroid = 0.0;
    out.width = 0.0;
  }
  const RealArray diff = density - reference.abs2();
  out.l2_error = std::sqrt((wt * diff.square()).sum());
  out.linf_error = diff.abs().maxCoeff();
  return out;
}

Trajectory evolve(const Scenario& scenario) {
  const EvolverConfig config = scenario.evolver_config();
  config.validate(scenario.grid);

  const SimilarityMap map = scenario.make_map();
  const StationaryProfile profile = scenario.make_profile();
  const Grid1D& grid = scenario.grid;
  const RealArray x = grid.points();

  FieldState state{grid, scenario.time.t0, assemble_wavefunction(map, profile, x, scenario.time.t0)};
  if (scenario.seed_perturbation) {
    SplitMix64 rng(0x50455254ULL);  // fixed seed: identical scenarios give identical noise
    for (Eigen::Index i = 0; i < state.values.size(); ++i)
      state.values[i] *= 1.0 + *scenario.seed_perturbation * rng.symmetric();
  }

  const Real span = scenario.time.t1 - scenario.time.t0;
  const long steps = static_cast<long>(std::ceil(span / config.dt - 1e-9));
  const Real dt_last = span - static_cast<Real>(steps - 1) * config.dt;

  std::unique_ptr<SplitStepFourier> split;
  std::unique_ptr<CrankNicolson> cn;
  auto w = similarity_coefficient(map);
  std::shared_ptr<LocalCoefficient> shared_w{std::move(w)};
  if (config.scheme == Scheme::SplitStepFourier)
    split = std::make_unique<SplitStepFourier>(grid, config.dt, shared_w);
  else
    cn = std::make_unique<CrankNicolson>(grid, config.dt, shared_w, analytic_boundary(map, profile));

  Trajectory traj;
  traj.steps = steps;

  const auto record_series = [&](Real t) {
    const ComplexArray ref = assemble_wavefunction(map, profile, x, t);
    traj.times.push_back(t);
    traj.series.push_back(compute_observables(state, ref));
  };
  const auto record_snapshot = [&](long step, Real t) {
    const ComplexArray ref = assemble_wavefunction(map, profile, x, t);
    traj.snapshots.push_back({step, t, state.values, ref.abs2()});
  };

  record_series(scenario.time.t0);
  record_snapshot(0, scenario.time.t0);

  for (long k = 0; k < steps; ++k) {
    const bool last = k == steps - 1;
    const Real step_dt = last ? dt_last : config.dt;
    if (split)
      split->advance(state, step_dt);
    else
      cn->advance(state, step_dt);
    const Real t = last ? scenario.time.t1 : scenario.time.t0 + static_cast<Real>(k + 1) * config.dt;
    state.t = t;  // keep recorded times free of accumulated roundoff
    record_series(t);
    if ((k + 1) % config.snapshot_stride == 0 || last) record_snapshot(k + 1, t);
  }
  return traj;
}

}  // namespace nlse
