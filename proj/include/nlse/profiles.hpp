#pragma once

// Exact stationary solutions Phi(zeta) of the reduced equation
//
//     mu Phi = -Phi'' + G3 |Phi|^2 Phi + G5 |Phi|^4 Phi
//
// at the four parameter tuples where a closed form exists:
//
//     cubic-bright  (mu = -1, G3 = -2)          Phi = sech(zeta)
//     cubic-dark    (mu =  2, G3 =  2)          Phi = tanh(zeta)
//     cq-bright     (mu =  0, G3 = 2, G5 = -3)  Phi = (1 + zeta^2)^{-1/2}
//     cq-dark       (mu =  3, G3 = 6, G5 = -3)  Phi = zeta (1 + zeta^2)^{-1/2}
//
// These are verified particular solutions; no general stationary solver is
// provided or intended.

#include <nlse/types.hpp>

namespace nlse {

class StationaryProfile {
 public:
  explicit StationaryProfile(Branch kind);

  Branch kind() const { return kind_; }
  Real mu() const { return mu_; }
  Real g3() const { return g3_; }
  Real g5() const { return g5_; }

  // true for profiles decaying to zero at infinity, false for unit-background ones
  bool bright() const { return kind_ == Branch::CubicBright || kind_ == Branch::CqBright; }

  struct Derivatives {
    Real value, d1, d2;
  };

  // Phi and its first two derivatives, all in closed form.
  Derivatives eval(Real zeta) const;
  Real value(Real zeta) const { return eval(zeta).value; }

  friend bool operator==(const StationaryProfile&, const StationaryProfile&) = default;

 private:
  Branch kind_;
  Real mu_, g3_, g5_;
};

// The (mu, G_3[, G_5]) tuple of a branch as coupling constants.
CouplingConstants branch_couplings(Branch kind);

// max over samples of |mu Phi + Phi'' - g3 Phi^3 - g5 Phi^5| with the given
// coefficients; the profile supplies Phi and Phi''.
Real reduced_equation_residual(Real mu, Real g3, Real g5, const StationaryProfile& profile,
                               const RealArray& zeta_samples);

// Same, with the profile's own coefficients. Machine-precision small for all
// four kinds.
Real stationary_residual(const StationaryProfile& profile, const RealArray& zeta_samples);

// Default sampling grid for residual checks: 1001 uniform points on [-10, 10].
RealArray default_residual_samples();

}  // namespace nlse
