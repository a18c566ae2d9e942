#pragma once

#include <nlse/types.hpp>

#include <numbers>

namespace nlse {

enum class Scheme { SplitStepFourier, CrankNicolson };
enum class BoundaryKind { Periodic, AnalyticDirichlet };

inline bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

// Uniform 1D grid. Periodic grids exclude x_max (spacing L/n, as sampled by
// the FFT); bounded grids include both endpoints (spacing L/(n-1)).
struct Grid1D {
  Real x_min;
  Real x_max;
  int n;
  bool periodic;

  Grid1D(Real x_min_, Real x_max_, int n_, bool periodic_)
      : x_min(x_min_), x_max(x_max_), n(n_), periodic(periodic_) {
    if (!(x_max > x_min)) throw std::invalid_argument("grid: x_max must exceed x_min");
    if (n < 16) throw std::invalid_argument("grid: need at least 16 points");
  }

  Real length() const { return x_max - x_min; }
  Real spacing() const { return periodic ? length() / n : length() / (n - 1); }

  RealArray points() const {
    const Real h = spacing();
    RealArray x(n);
    for (int i = 0; i < n; ++i) x[i] = x_min + h * i;
    return x;
  }

  // FFT-ordered wavenumbers (periodic grids only).
  RealArray wavenumbers() const {
    const Real dk = 2.0 * std::numbers::pi / length();
    RealArray k(n);
    for (int i = 0; i < n; ++i) k[i] = dk * (i < n / 2 ? i : i - n);
    return k;
  }

  friend bool operator==(const Grid1D&, const Grid1D&) = default;
};

// Complex field samples on a grid at one time instant.
struct FieldState {
  Grid1D grid;
  Real t;
  ComplexArray values;

  bool finite() const { return values.allFinite(); }
  RealArray density() const { return values.abs2(); }
};

struct EvolverConfig {
  Scheme scheme = Scheme::SplitStepFourier;
  Real dt = 1e-3;
  BoundaryKind boundary = BoundaryKind::Periodic;
  int snapshot_stride = 200;

  void validate(const Grid1D& grid) const {
    if (!(dt > 0)) throw std::invalid_argument("evolver: dt must be positive");
    if (snapshot_stride < 1) throw std::invalid_argument("evolver: snapshot_stride must be >= 1");
    if (scheme == Scheme::SplitStepFourier) {
      if (boundary != BoundaryKind::Periodic)
        throw std::invalid_argument("evolver: split-step-fourier requires periodic boundary");
      if (!is_power_of_two(grid.n))
        throw std::invalid_argument("evolver: split-step-fourier needs a power-of-two grid");
      if (!grid.periodic) throw std::invalid_argument("evolver: split-step-fourier needs a periodic grid");
    } else {
      if (boundary != BoundaryKind::AnalyticDirichlet)
        throw std::invalid_argument("evolver: crank-nicolson requires analytic-dirichlet boundary");
      if (grid.periodic) throw std::invalid_argument("evolver: crank-nicolson needs a bounded grid");
    }
  }
};

}  // namespace nlse
