#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "dgtime/numerics/quadrature.hpp"
#include "dgtime/scalar.hpp"
#include "dgtime/siac/bspline.hpp"

namespace dgtime::siac {

/// Moments int x^i psi^(order)(x) dx, i = 0..max_power, by Gauss quadrature
/// exact on every polynomial piece.
template <class Real>
std::vector<Real> bspline_moments(int order, int max_power) {
  const auto rule = numerics::gauss_legendre_rule<Real>((order + max_power) / 2 + 1);
  const auto breaks = bspline_breakpoints<Real>(order);
  std::vector<Real> mu(max_power + 1, Real(0));
  for (std::size_t b = 0; b + 1 < breaks.size(); ++b)
    for (int i = 0; i <= max_power; ++i)
      mu[i] += rule.integrate(
          [&](const Real &x) {
            Real xi = 1;
            for (int k = 0; k < i; ++k) xi *= x;
            return xi * bspline_eval(order, x);
          },
          breaks[b], breaks[b + 1]);
  return mu;
}

/// Coefficients c_0..c_2p of the kernel sum_g c_g psi^(p+1)(x - (g - p)),
/// fixed by requiring int K(y) y^k dy = delta_k0 for k = 0..2p.
template <class Real>
std::vector<Real> kernel_coefficients(int p) {
  if (p < 1) throw std::invalid_argument("kernel_coefficients: degree must be >= 1");
  const int n = 2 * p + 1;
  const auto mu = bspline_moments<Real>(p + 1, 2 * p);
  Matrix<Real> A(n, n);
  Vector<Real> rhs = Vector<Real>::Zero(n);
  rhs(0) = 1;
  for (int k = 0; k < n; ++k)
    for (int g = 0; g < n; ++g) {
      const Real s = Real(g - p);
      // int psi(z) (z + s)^k dz
      Real sum = 0, binom = 1, spow = 1;
      std::vector<Real> powers(k + 1);
      for (int i = 0; i <= k; ++i) {
        powers[i] = spow;
        spow *= s;
      }
      for (int i = 0; i <= k; ++i) {
        sum += binom * powers[k - i] * mu[i];
        binom = binom * Real(k - i) / Real(i + 1);
      }
      A(k, g) = sum;
    }
  Eigen::FullPivLU<Matrix<Real>> lu(A);
  if (lu.rank() < n) throw ConstructionFailure("kernel_coefficients: singular moment matrix");
  Vector<Real> c = lu.solve(rhs);
  return std::vector<Real>(c.data(), c.data() + n);
}

/// Symmetric SIAC kernel of 2p+1 central B-splines of order p+1, in
/// kernel coordinates (unscaled).
template <class Real>
class SIACKernel {
 public:
  explicit SIACKernel(int p) : p_(p), coeffs_(kernel_coefficients<Real>(p)) {}

  int degree() const { return p_; }
  int spline_order() const { return p_ + 1; }
  const std::vector<Real> &coefficients() const { return coeffs_; }
  Real shift(int g) const { return Real(g - p_); }

  /// Half-width of the support, (3p+1)/2.
  Real half_width() const { return Real(3 * p_ + 1) / 2; }

  Real operator()(const Real &x) const {
    Real v = 0;
    for (int g = 0; g <= 2 * p_; ++g) v += coeffs_[g] * bspline_eval(p_ + 1, Real(x - shift(g)));
    return v;
  }

  /// Unit-spaced breakpoints spanning the support.
  std::vector<Real> breakpoints() const {
    std::vector<Real> b;
    for (int k = 0; k <= 3 * p_ + 1; ++k) b.push_back(Real(k) - half_width());
    return b;
  }

 private:
  int p_;
  std::vector<Real> coeffs_;
};

}  // namespace dgtime::siac
