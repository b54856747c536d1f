#pragma once

#include <utility>

namespace dgtime::numerics {

/// Legendre polynomial P_n and its derivative at x, by the three-term
/// recurrence. Returns {P_n(x), P_n'(x)}.
template <class Real>
std::pair<Real, Real> legendre(int n, const Real &x) {
  if (n == 0) return {Real(1), Real(0)};
  Real p_prev = 1, p = x;
  Real d_prev = 0, d = 1;
  for (int k = 1; k < n; ++k) {
    Real p_next = (Real(2 * k + 1) * x * p - Real(k) * p_prev) / Real(k + 1);
    // P'_{k+1} = P'_{k-1} + (2k+1) P_k
    Real d_next = d_prev + Real(2 * k + 1) * p;
    p_prev = p;
    p = p_next;
    d_prev = d;
    d = d_next;
  }
  return {p, d};
}

}  // namespace dgtime::numerics
