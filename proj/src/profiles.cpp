#include <nlse/profiles.hpp>

#include <cmath>

namespace nlse {

StationaryProfile::StationaryProfile(Branch kind) : kind_(kind) {
  const CouplingConstants c = branch_couplings(kind);
  mu_ = c.mu();
  g3_ = c.g3();
  g5_ = c.g5();
}

CouplingConstants branch_couplings(Branch kind) {
  switch (kind) {
    case Branch::CubicBright: return {-1.0, {-2.0}};
    case Branch::CubicDark: return {2.0, {2.0}};
    case Branch::CqBright: return {0.0, {2.0, -3.0}};
    case Branch::CqDark: return {3.0, {6.0, -3.0}};
  }
  throw std::invalid_argument("unknown branch tag");
}

StationaryProfile::Derivatives StationaryProfile::eval(Real zeta) const {
  switch (kind_) {
    case Branch::CubicBright: {
      const Real sech = 1.0 / std::cosh(zeta);
      const Real th = std::tanh(zeta);
      return {sech, -sech * th, sech - 2.0 * sech * sech * sech};
    }
    case Branch::CubicDark: {
      const Real th = std::tanh(zeta);
      const Real sech2 = 1.0 - th * th;
      return {th, sech2, -2.0 * th * sech2};
    }
    case Branch::CqBright: {
      const Real q = 1.0 + zeta * zeta;
      const Real r = 1.0 / std::sqrt(q);
      const Real r3 = r / q;
      const Real r5 = r3 / q;
      return {r, -zeta * r3, (2.0 * zeta * zeta - 1.0) * r5};
    }
    case Branch::CqDark: {
      const Real q = 1.0 + zeta * zeta;
      const Real r = 1.0 / std::sqrt(q);
      const Real r3 = r / q;
      const Real r5 = r3 / q;
      return {zeta * r, r3, -3.0 * zeta * r5};
    }
  }
  throw std::invalid_argument("unknown branch tag");
}

Real reduced_equation_residual(Real mu, Real g3, Real g5, const StationaryProfile& profile,
                               const RealArray& zeta_samples) {
  Real worst = 0.0;
  for (Eigen::Index i = 0; i < zeta_samples.size(); ++i) {
    const auto [phi, dphi, d2phi] = profile.eval(zeta_samples[i]);
    const Real p2 = phi * phi;
    const Real res = mu * phi + d2phi - g3 * p2 * phi - g5 * p2 * p2 * phi;
    worst = std::max(worst, std::abs(res));
  }
  return worst;
}

Real stationary_residual(const StationaryProfile& profile, const RealArray& zeta_samples) {
  return reduced_equation_residual(profile.mu(), profile.g3(), profile.g5(), profile, zeta_samples);
}

RealArray default_residual_samples() { return RealArray::LinSpaced(1001, -10.0, 10.0); }

}  // namespace nlse
