#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "dgtime/scalar.hpp"

namespace dgtime::siac {

/// Central B-spline psi^(order)(x): degree order-1, support [-order/2, order/2],
/// unit mass. The base case is the half-open indicator of [-1/2, 1/2).
template <class Real>
Real bspline_eval(int order, const Real &x) {
  if (order < 1) throw std::invalid_argument("bspline_eval: order must be >= 1");
  if (order == 1) return (x >= Real(-0.5) && x < Real(0.5)) ? Real(1) : Real(0);
  const Real half_support = Real(order) / 2;
  if (x <= -half_support || x >= half_support) return Real(0);
  const int l = order - 1;
  const Real half = Real(0.5);
  return ((half_support + x) * bspline_eval(l, Real(x + half)) +
          (half_support - x) * bspline_eval(l, Real(x - half))) /
         Real(l);
}

/// Breakpoints of psi^(order): -order/2, -order/2 + 1, ..., order/2.
template <class Real>
std::vector<Real> bspline_breakpoints(int order) {
  std::vector<Real> b;
  for (int k = 0; k <= order; ++k) b.push_back(Real(k) - Real(order) / 2);
  return b;
}

}  // namespace dgtime::siac
