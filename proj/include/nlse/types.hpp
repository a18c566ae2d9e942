#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

namespace nlse {

using Real = double;
using Complex = std::complex<Real>;
using RealArray = Eigen::ArrayXd;
using ComplexArray = Eigen::ArrayXcd;

// The four exact branches of the reduced stationary problem.
enum class Branch { CubicBright, CubicDark, CqBright, CqDark };

inline const char* branch_name(Branch b) {
  switch (b) {
    case Branch::CubicBright: return "cubic-bright";
    case Branch::CubicDark: return "cubic-dark";
    case Branch::CqBright: return "cq-bright";
    case Branch::CqDark: return "cq-dark";
  }
  throw std::invalid_argument("unknown branch tag");
}

// Eigenvalue mu and the constant couplings G_3, G_5, ..., G_{2N+1} of the
// reduced equation. G_3 must be nonzero: the similarity construction divides
// by |G_3| and takes its sign.
class CouplingConstants {
 public:
  CouplingConstants(Real mu, std::vector<Real> g_odd) : mu_(mu), g_odd_(std::move(g_odd)) {
    if (g_odd_.empty()) throw std::invalid_argument("couplings: need at least G_3");
    if (g_odd_.front() == 0.0) throw std::invalid_argument("couplings: G_3 must be nonzero");
  }

  Real mu() const { return mu_; }
  int order_count() const { return static_cast<int>(g_odd_.size()); }

  // G_{2n+1} for n = 1..N.
  Real g(int n) const {
    if (n < 1 || n > order_count()) throw std::out_of_range("couplings: order out of range");
    return g_odd_[static_cast<size_t>(n - 1)];
  }

  Real g3() const { return g_odd_.front(); }
  Real g5() const { return order_count() >= 2 ? g_odd_[1] : 0.0; }
  const std::vector<Real>& g_odd() const { return g_odd_; }

  friend bool operator==(const CouplingConstants&, const CouplingConstants&) = default;

 private:
  Real mu_;
  std::vector<Real> g_odd_;
};

}  // namespace nlse
