#pragma once

// Time integration of i psi_t = -psi_xx + w(x,t,|psi|^2) psi, where
// w = v + sum_n g_{2n+1} |psi|^{2n} is the local (pointwise) coefficient.
//
// Two schemes:
//  * Strang split-step Fourier: exact spectral kinetic half-steps
//    exp(-i k^2 dt/2) around a pointwise rotation exp(-i w dt), with the
//    coefficients sampled at the step midpoint. Periodic boundary; needs the
//    field to be effectively periodic (bright branches on a wide grid).
//  * Crank-Nicolson: second-order finite differences, trapezoidal in time,
//    nonlinear density handled by a predictor-corrector iteration, boundary
//    values pinned to the analytic solution. This is the scheme for fields
//    with a non-decaying background (dark branches) and for the cq bell,
//    whose tails decay only algebraically.

#include <nlse/scenario.hpp>

#include <functional>
#include <memory>

#include <unsupported/Eigen/FFT>

namespace nlse {

// Pointwise coefficient w(x, t, density). prepare() caches the x- and
// t-dependent pieces so that repeated apply() calls (corrector iterations)
// only pay for the density polynomial.
class LocalCoefficient {
 public:
  virtual ~LocalCoefficient() = default;
  virtual void prepare(const RealArray& x, Real t) = 0;
  virtual RealArray apply(const RealArray& density) const = 0;
};

// w = v(x,t) + sum_n g_{2n+1}(x,t) density^n from the similarity closed forms.
std::unique_ptr<LocalCoefficient> similarity_coefficient(const SimilarityMap& map);

// w identically zero (free particle); for tests and calibration runs.
std::unique_ptr<LocalCoefficient> zero_coefficient();

using BoundaryFn = std::function<Complex(Real x, Real t)>;

// Dirichlet values taken from the assembled analytic solution.
BoundaryFn analytic_boundary(const SimilarityMap& map, const StationaryProfile& profile);

struct StepFailure : std::runtime_error {
  long step_index;
  explicit StepFailure(long index)
      : std::runtime_error("integration failure: non-finite field after step " +
                           std::to_string(index)),
        step_index(index) {}
};

class SplitStepFourier {
 public:
  SplitStepFourier(const Grid1D& grid, Real dt, std::shared_ptr<LocalCoefficient> w);

  // One Strang step; advances state.t by dt. Throws StepFailure if the field
  // leaves the finite range.
  void advance(FieldState& state);
  void advance(FieldState& state, Real dt_override);

  Real dt() const { return dt_; }

 private:
  void kinetic_half(ComplexArray& psi, const ComplexArray& factor);
  ComplexArray half_factor(Real dt) const;

  Grid1D grid_;
  Real dt_;
  std::shared_ptr<LocalCoefficient> w_;
  RealArray x_, k2_;
  ComplexArray kin_half_;   // exp(-i k^2 dt / 2)
  ComplexArray freq_;       // scratch
  Eigen::FFT<Real> fft_;
  long steps_done_ = 0;
};

class CrankNicolson {
 public:
  CrankNicolson(const Grid1D& grid, Real dt, std::shared_ptr<LocalCoefficient> w,
                BoundaryFn boundary, int max_iterations = 10, Real tolerance = 1e-12);

  void advance(FieldState& state);
  void advance(FieldState& state, Real dt_override);

  Real dt() const { return dt_; }

 private:
  Grid1D grid_;
  Real dt_;
  std::shared_ptr<LocalCoefficient> w_;
  BoundaryFn boundary_;
  int max_iterations_;
  Real tolerance_;
  RealArray x_;
  Real inv_h2_;
  ComplexArray lower_, diag_, upper_, rhs_, next_, prev_iter_, scratch_;
  long steps_done_ = 0;
};

// Solve a tridiagonal system in place: lower[i] x[i-1] + diag[i] x[i] +
// upper[i] x[i+1] = rhs[i]. lower[0] and upper[n-1] are ignored.
void tridiagonal_solve(const ComplexArray& lower, const ComplexArray& diag,
                       const ComplexArray& upper, const ComplexArray& rhs, ComplexArray& out);

struct Observables {
  Real norm, peak, centroid, width, l2_error, linf_error;
};

// Discrete norm, density moments, and density errors against a reference
// field sampled on the same grid.
Observables compute_observables(const FieldState& state, const ComplexArray& reference);

struct Snapshot {
  long step;
  Real t;
  ComplexArray psi;
  RealArray density_exact;
};

struct Trajectory {
  std::vector<Real> times;             // one entry per step, including t0
  std::vector<Observables> series;     // aligned with times
  std::vector<Snapshot> snapshots;     // every snapshot_stride steps plus the final state
  long steps = 0;
};

// Integrate a scenario from t0 to t1, seeding with the analytic solution at
// t0 (optionally perturbed). Scalar diagnostics are recorded every step
// against the analytic solution.
Trajectory evolve(const Scenario& scenario);

}  // namespace nlse
