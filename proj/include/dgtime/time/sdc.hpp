#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "dgtime/numerics/lagrange.hpp"
#include "dgtime/numerics/quadrature.hpp"
#include "dgtime/scalar.hpp"
#include "dgtime/time/correction.hpp"

namespace dgtime::time {

/// Literal keeps u_{n,0} = u_n on every sweep; Corrected integrates the
/// interpolant over [t_n, t_{n,0}].
enum class SDCVariant { Literal, Corrected };

template <class Real>
struct SDCTableau {
  int degree = 0;
  SDCVariant variant = SDCVariant::Corrected;
  std::vector<Real> nodes;
  std::vector<Real> gaps;  // tau_{m+1} - tau_m
  Matrix<Real> S;          // S(0, j) over [-1, tau_0]; S(m+1, j) over [tau_m, tau_{m+1}]

  CorrectionScheme<Real> scheme() const {
    CorrectionScheme<Real> s;
    s.nodes = nodes;
    s.correction = gaps;
    s.quadrature = S;
    if (variant == SDCVariant::Literal) s.quadrature.row(0).setZero();
    return s;
  }
};

template <class Real>
SDCTableau<Real> build_sdc_tableau(int p, SDCVariant variant = SDCVariant::Corrected) {
  if (p < 1) throw std::invalid_argument("build_sdc_tableau: degree must be >= 1");
  SDCTableau<Real> tab;
  tab.degree = p;
  tab.variant = variant;
  tab.nodes = numerics::gauss_radau_right_rule<Real>(p + 1).nodes;
  const numerics::LagrangeBasis<Real> basis(tab.nodes);
  const auto gauss = numerics::gauss_legendre_rule<Real>(p + 1);
  const Eigen::Index n = p + 1;
  tab.S.resize(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const Real lo = r == 0 ? Real(-1) : tab.nodes[r - 1];
    const Real hi = tab.nodes[r];
    for (Eigen::Index j = 0; j < n; ++j)
      tab.S(r, j) = gauss.integrate([&](const Real &t) { return basis.value(j, t); }, lo, hi);
  }
  for (int m = 0; m < p; ++m) tab.gaps.push_back(tab.nodes[m + 1] - tab.nodes[m]);
  return tab;
}

/// Euler predictor plus `sweeps` correction sweeps.
template <class Real, class State, class Rhs>
State sdc_step(const State &un, const Real &tn, const Real &dt, int sweeps, Rhs &&rhs,
               const SDCTableau<Real> &tab) {
  if (!(dt > 0)) throw std::invalid_argument("sdc_step: dt must be > 0");
  return correction_step(tab.scheme(), un, tn, dt, sweeps, rhs);
}

}  // namespace dgtime::time
