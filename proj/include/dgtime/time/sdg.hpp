#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dgtime/numerics/lagrange.hpp"
#include "dgtime/numerics/quadrature.hpp"
#include "dgtime/scalar.hpp"
#include "dgtime/time/correction.hpp"

namespace dgtime::time {

/// Matrices of the explicit spectral DG-in-time scheme on [-1, 1].
template <class Real>
struct SDGTableau {
  int degree = 0;
  std::vector<Real> nodes;
  std::vector<Real> weights;
  Matrix<Real> L;        // L(i, j) = int l_i' l_j - delta_ip delta_jp
  Matrix<Real> L_delta;  // -1 diagonal, +1 subdiagonal
  Matrix<Real> L_tilde;  // L_delta L^{-1}
  Vector<Real> trace;    // l_j(-1)
  Real condition = 0;    // estimated condition number of L

  CorrectionScheme<Real> scheme() const {
    CorrectionScheme<Real> s;
    s.nodes = nodes;
    s.correction.assign(weights.begin(), weights.end() - 1);
    const Eigen::Index n = degree + 1;
    s.quadrature.resize(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) s.quadrature(i, j) = L_tilde(i, j) * weights[j];
    return s;
  }
};

/// Tableau on arbitrary increasing nodes in (-1, 1] ending at 1. The weights
/// are the interpolatory ones, int l_j over [-1, 1].
template <class Real>
SDGTableau<Real> build_sdg_tableau(std::vector<Real> nodes) {
  if (nodes.size() < 2) throw std::invalid_argument("build_sdg_tableau: need at least two nodes");
  if (nodes.back() != Real(1)) throw std::invalid_argument("build_sdg_tableau: last node must be 1");
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
    if (!(nodes[i] < nodes[i + 1]) || !(nodes[i] > Real(-1)))
      throw std::invalid_argument("build_sdg_tableau: nodes must increase inside (-1, 1]");

  SDGTableau<Real> tab;
  tab.degree = static_cast<int>(nodes.size()) - 1;
  const int p = tab.degree;
  const Eigen::Index n = p + 1;
  const numerics::LagrangeBasis<Real> basis(nodes);
  const auto gauss = numerics::gauss_legendre_rule<Real>(p + 2);

  tab.weights.resize(n);
  tab.L.resize(n, n);
  tab.trace.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    tab.weights[i] = gauss.integrate([&](const Real &t) { return basis.value(i, t); });
    tab.trace(i) = basis.value(i, Real(-1));
    for (Eigen::Index j = 0; j < n; ++j)
      tab.L(i, j) = gauss.integrate([&](const Real &t) { return basis.derivative(i, t) * basis.value(j, t); });
  }
  tab.L(p, p) -= 1;

  tab.L_delta = Matrix<Real>::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    tab.L_delta(i, i) = -1;
    if (i > 0) tab.L_delta(i, i - 1) = 1;
  }

  Eigen::FullPivLU<Matrix<Real>> lu(tab.L);
  if (lu.rank() < n) throw ConstructionFailure("build_sdg_tableau: L is singular");
  const Matrix<Real> inverse = lu.inverse();
  using std::abs;
  Real norm_l = 0, norm_inv = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    norm_l = std::max(norm_l, Real(tab.L.row(i).cwiseAbs().sum()));
    norm_inv = std::max(norm_inv, Real(inverse.row(i).cwiseAbs().sum()));
  }
  tab.condition = norm_l * norm_inv;
  tab.L_tilde = tab.L_delta * inverse;
  tab.nodes = std::move(nodes);
  return tab;
}

/// Tableau on the p+1 right Gauss-Radau nodes.
template <class Real>
SDGTableau<Real> build_sdg_tableau(int p) {
  if (p < 1) throw std::invalid_argument("build_sdg_tableau: degree must be >= 1");
  auto rule = numerics::gauss_radau_right_rule<Real>(p + 1);
  auto tab = build_sdg_tableau<Real>(rule.nodes);
  tab.weights = rule.weights;
  return tab;
}

template <class Real, class State, class Rhs>
SweepState<State> sdg_predictor(const State &un, const Real &tn, const Real &dt, Rhs &&rhs,
                                const SDGTableau<Real> &tab) {
  if (!(dt > 0)) throw std::invalid_argument("sdg_predictor: dt must be > 0");
  auto s = predict(tab.scheme(), un, tn, dt, rhs);
  for (const auto &u : s.u) check_finite(u, "sdg_predictor");
  return s;
}

template <class Real, class State, class Rhs>
SweepState<State> sdg_sweep(SweepState<State> state, const State &un, const Real &tn, const Real &dt, Rhs &&rhs,
                            const SDGTableau<Real> &tab) {
  auto s = sweep(tab.scheme(), std::move(state), un, tn, dt, rhs);
  for (const auto &u : s.u) check_finite(u, "sdg_sweep");
  return s;
}

/// Euler predictor plus `sweeps` correction sweeps.
template <class Real, class State, class Rhs>
State sdg_step(const State &un, const Real &tn, const Real &dt, int sweeps, Rhs &&rhs,
               const SDGTableau<Real> &tab) {
  if (!(dt > 0)) throw std::invalid_argument("sdg_step: dt must be > 0");
  return correction_step(tab.scheme(), un, tn, dt, sweeps, rhs);
}

/// Stage values of the DG-in-time weak form L U + dt/2 F(U) + B = 0 for the
/// scalar problem u' = lambda u, with F(U)_i = w_i lambda U_i.
template <class Real>
Vector<Real> dg_collocation_solve(const Real &un, const Real &tn, const Real &dt, const Real &lambda,
                                  const SDGTableau<Real> &tab) {
  (void)tn;
  const Eigen::Index n = tab.degree + 1;
  Matrix<Real> A = tab.L;
  for (Eigen::Index i = 0; i < n; ++i) A(i, i) += dt / 2 * lambda * tab.weights[i];
  Eigen::FullPivLU<Matrix<Real>> lu(A);
  using std::abs;
  if (lu.rank() < n || !(abs(lu.determinant()) > 0))
    throw SolverFailure("dg_collocation_solve: singular system");
  Vector<Real> rhs = -un * tab.trace;
  return lu.solve(rhs);
}

}  // namespace dgtime::time
