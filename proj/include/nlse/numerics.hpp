#pragma once

#include <nlse/types.hpp>

#include <cmath>
#include <cstdint>

namespace nlse {

// Least-squares slope of log(y) against log(x). Used for convergence-order
// estimates; callers guarantee x, y > 0 and equal sizes >= 2.
inline Real loglog_slope(const std::vector<Real>& x, const std::vector<Real>& y) {
  const auto n = static_cast<Real>(x.size());
  Real sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    const Real lx = std::log(x[i]);
    const Real ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// splitmix64: tiny deterministic generator with a portable value sequence,
// used only to seed reproducible perturbations.
struct SplitMix64 {
  uint64_t state;
  explicit SplitMix64(uint64_t seed) : state(seed) {}
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // uniform in [-1, 1), reproducible across platforms
  Real symmetric() { return 2.0 * (static_cast<Real>(next() >> 11) * 0x1.0p-53) - 1.0; }
};

}  // namespace nlse
