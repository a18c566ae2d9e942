#include <nlse/numerics.hpp>
#include <nlse/similarity.hpp>

#include <unsupported/Eigen/SpecialFunctions>

namespace nlse {

RealArray SimilarityMap::xi(const RealArray& x, Real t) const { return x / width_.chi(t); }

RealArray SimilarityMap::zeta(const RealArray& x, Real t) const {
  const Real half_sqrt_pi = std::sqrt(std::numbers::pi) / 2.0;
  const RealArray q = x / width_.chi(t);
  return slope_ * (q + shape_.lambda() * half_sqrt_pi * q.erf());
}

RealArray SimilarityMap::rho(const RealArray& x, Real t) const {
  const Real chi = width_.chi(t);
  const RealArray q = x / chi;
  const RealArray u = 1.0 + shape_.lambda() * (-q.square()).exp();
  return rho_scale_ * (chi * u).rsqrt();
}

RealArray SimilarityMap::phase(const RealArray& x, Real t) const {
  const WidthProfile::State w = width_.eval(t);
  return w.chi_dot / (4.0 * w.chi) * x.square();
}

RealArray SimilarityMap::curvature_term(const RealArray& x, Real t) const {
  const Real chi = width_.chi(t);
  const Real lam = shape_.lambda();
  const RealArray q = x / chi;
  const RealArray e = (-q.square()).exp();
  const RealArray u = 1.0 + lam * e;
  const RealArray u1 = -2.0 * lam * q * e;
  const RealArray u2 = lam * (4.0 * q.square() - 2.0) * e;
  return (-u2 / (2.0 * u) + 0.75 * (u1 / u).square()) / (chi * chi);
}

RealArray SimilarityMap::potential(const RealArray& x, Real t) const {
  const WidthProfile::State w = width_.eval(t);
  const Real omega = -w.chi_ddot / (4.0 * w.chi);
  const Real chi2 = w.chi * w.chi;
  const Real lam = shape_.lambda();
  const RealArray q = x / w.chi;
  const RealArray e = (-q.square()).exp();
  const RealArray u = 1.0 + lam * e;
  const RealArray u1 = -2.0 * lam * q * e;
  const RealArray u2 = lam * (4.0 * q.square() - 2.0) * e;
  const RealArray f = (-u2 / (2.0 * u) + 0.75 * (u1 / u).square()) / chi2;
  return omega * x.square() + f - couplings_.mu() * slope_ * slope_ / chi2 * u.square();
}

RealArray SimilarityMap::nonlinearity(int order_n, const RealArray& x, Real t) const {
  const Real g = couplings_.g(order_n);
  const Real chi = width_.chi(t);
  const RealArray r2 = rho(x, t).square();
  RealArray rpow = r2.square();  // rho^4
  for (int i = 0; i < order_n; ++i) rpow *= r2;
  return g / (chi * chi * chi * chi * rpow);
}

namespace {

void require_matching_couplings(const SimilarityMap& map, const StationaryProfile& profile) {
  const CouplingConstants& c = map.couplings();
  if (c.mu() != profile.mu() || c.g3() != profile.g3() || c.g5() != profile.g5())
    throw std::invalid_argument("assemble: profile couplings do not match the map");
}

}  // namespace

Complex assemble_wavefunction(const SimilarityMap& map, const StationaryProfile& profile, Real x,
                              Real t) {
  require_matching_couplings(map, profile);
  const auto [xi, zeta] = map.zeta(x, t);
  (void)xi;
  const Real amp = map.rho(x, t) * profile.value(zeta);
  const Real ph = map.phase(x, t);
  return Complex{amp * std::cos(ph), amp * std::sin(ph)};
}

ComplexArray assemble_wavefunction(const SimilarityMap& map, const StationaryProfile& profile,
                                   const RealArray& x, Real t) {
  require_matching_couplings(map, profile);
  const RealArray zeta = map.zeta(x, t);
  RealArray amp = map.rho(x, t);
  for (Eigen::Index i = 0; i < x.size(); ++i) amp[i] *= profile.value(zeta[i]);
  const RealArray ph = map.phase(x, t);
  ComplexArray out(x.size());
  out.real() = amp * ph.cos();
  out.imag() = amp * ph.sin();
  return out;
}

Complex assembled_closed_form(const SimilarityMap& map, Branch branch, Real x, Real t) {
  const Real chi = map.width().chi(t);
  const Real q = x / chi;
  const Real u = map.shape().value(q);
  const Real zeta = map.zeta_of_xi(q);
  const Real ph = map.phase(x, t);
  const Complex rot{std::cos(ph), std::sin(ph)};
  const Real sixth2 = std::pow(2.0, 1.0 / 6.0);
  switch (branch) {
    case Branch::CubicBright: return sixth2 / std::cosh(zeta) / std::sqrt(chi * u) * rot;
    case Branch::CubicDark: return sixth2 * std::tanh(zeta) / std::sqrt(chi * u) * rot;
    case Branch::CqBright: return sixth2 / std::sqrt(chi * u * (1.0 + zeta * zeta)) * rot;
    case Branch::CqDark:
      return std::pow(6.0, 1.0 / 6.0) * zeta / std::sqrt(chi * u * (1.0 + zeta * zeta)) * rot;
  }
  throw std::invalid_argument("unknown branch tag");
}

Real branch_potential(const SimilarityMap& map, Branch branch, Real x, Real t) {
  const WidthProfile::State w = map.width().eval(t);
  const Real omega = -w.chi_ddot / (4.0 * w.chi);
  const Real u = map.shape().value(x / w.chi);
  const Real base = omega * x * x + map.curvature_term(x, t);
  const Real uu_chi2 = u * u / (w.chi * w.chi);
  switch (branch) {
    case Branch::CubicBright: return base + std::pow(2.0, -2.0 / 3.0) * uu_chi2;
    case Branch::CubicDark: return base - std::pow(2.0, 1.0 / 3.0) * uu_chi2;
    case Branch::CqBright: return base;
    case Branch::CqDark: return base - std::pow(0.75, 1.0 / 3.0) * uu_chi2;
  }
  throw std::invalid_argument("unknown branch tag");
}

Real cubic_nonlinearity_closed(const SimilarityMap& map, Real x, Real t) {
  const Real chi = map.width().chi(t);
  const Real u = map.shape().value(x / chi);
  const Real sgn = map.couplings().g3() > 0 ? 1.0 : -1.0;
  return sgn * u * u * u / chi;
}

Real quintic_nonlinearity_closed(const SimilarityMap& map, Real x, Real t) {
  const Real chi = map.width().chi(t);
  const Real u = map.shape().value(x / chi);
  const Real u2 = u * u;
  return map.couplings().g5() * std::pow(std::abs(map.couplings().g3()), -4.0 / 3.0) * u2 * u2;
}

namespace {

// central difference of a field in its first argument
template <typename F>
Real dx(F&& field, Real x, Real t, Real h) {
  return (field(x + h, t) - field(x - h, t)) / (2.0 * h);
}

// central difference in time
template <typename F>
Real dt(F&& field, Real x, Real t, Real h) {
  return (field(x, t + h) - field(x, t - h)) / (2.0 * h);
}

}  // namespace

ConstraintReport verify_constraints(const SimilarityMap& map, const ConstraintLattice& lattice) {
  const auto rho = [&](Real x, Real t) { return map.rho(x, t); };
  const auto phase = [&](Real x, Real t) { return map.phase(x, t); };
  const auto zeta = [&](Real x, Real t) { return map.zeta(x, t).zeta; };

  const RealArray xs = RealArray::LinSpaced(lattice.nx, lattice.x_min, lattice.x_max);
  const RealArray ts = RealArray::LinSpaced(lattice.nt, lattice.t_min, lattice.t_max);

  ConstraintReport report;
  for (int level = 0; level < lattice.levels; ++level) {
    const Real h = lattice.h0 / static_cast<Real>(1 << level);
    Real worst_continuity = 0, worst_advection = 0, worst_flux = 0;
    for (Eigen::Index it = 0; it < ts.size(); ++it) {
      const Real t = ts[it];
      // current and flux products, sampled as functions of x at fixed t
      const auto current = [&](Real y, Real tt) { return rho(y, tt) * rho(y, tt) * dx(phase, y, tt, h); };
      const auto flux = [&](Real y, Real tt) { return rho(y, tt) * rho(y, tt) * dx(zeta, y, tt, h); };
      for (Eigen::Index ix = 0; ix < xs.size(); ++ix) {
        const Real x = xs[ix];
        const Real continuity = rho(x, t) * dt(rho, x, t, h) + dx(current, x, t, h);
        const Real advection = dt(zeta, x, t, h) + 2.0 * dx(phase, x, t, h) * dx(zeta, x, t, h);
        const Real flux_div = dx(flux, x, t, h);
        worst_continuity = std::max(worst_continuity, std::abs(continuity));
        worst_advection = std::max(worst_advection, std::abs(advection));
        worst_flux = std::max(worst_flux, std::abs(flux_div));
      }
    }
    report.levels.push_back({h, worst_continuity, worst_advection, worst_flux});
  }

  if (lattice.levels >= 3) {
    std::vector<Real> hs, rc, ra, rf;
    for (const auto& lv : report.levels) {
      hs.push_back(lv.h);
      rc.push_back(lv.continuity);
      ra.push_back(lv.advection);
      rf.push_back(lv.flux);
    }
    report.order_continuity = loglog_slope(hs, rc);
    report.order_advection = loglog_slope(hs, ra);
    report.order_flux = loglog_slope(hs, rf);
  }
  return report;
}

}  // namespace nlse
