#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "dgtime/dg/mesh.hpp"
#include "dgtime/numerics/legendre.hpp"
#include "dgtime/numerics/quadrature.hpp"
#include "dgtime/scalar.hpp"

namespace dgtime::dg {

/// Legendre polynomials scaled to be orthonormal on [-1, 1]:
/// phi_k = sqrt((2k+1)/2) P_k.
template <class Real>
struct ModalBasis {
  static Real scale(int k) {
    using std::sqrt;
    return sqrt(Real(2 * k + 1) / Real(2));
  }
  static Real value(int k, const Real &xi) { return scale(k) * numerics::legendre(k, xi).first; }
  static Real derivative(int k, const Real &xi) { return scale(k) * numerics::legendre(k, xi).second; }
  /// phi_k(+1) and phi_k(-1).
  static Real right_trace(int k) { return scale(k); }
  static Real left_trace(int k) { return k % 2 == 0 ? scale(k) : Real(-scale(k)); }
};

/// Piecewise polynomial u_h in V_h: one row of p+1 modal coefficients per
/// element.
template <class Real>
class DGSolution {
 public:
  DGSolution(Mesh<Real> mesh, int degree, Real time = Real(0))
      : mesh_(std::move(mesh)), degree_(degree), coeffs_(Coeffs<Real>::Zero(mesh_.size(), degree + 1)), time_(time) {
    if (degree < 0) throw std::invalid_argument("DGSolution: degree must be >= 0");
  }
  DGSolution(Mesh<Real> mesh, int degree, Coeffs<Real> coeffs, Real time)
      : mesh_(std::move(mesh)), degree_(degree), coeffs_(std::move(coeffs)), time_(time) {
    if (coeffs_.rows() != mesh_.size() || coeffs_.cols() != degree_ + 1)
      throw std::invalid_argument("DGSolution: coefficient shape does not match mesh and degree");
  }

  const Mesh<Real> &mesh() const { return mesh_; }
  int degree() const { return degree_; }
  const Coeffs<Real> &coeffs() const { return coeffs_; }
  Coeffs<Real> &coeffs() { return coeffs_; }
  const Real &time() const { return time_; }
  void set_time(Real t) { time_ = t; }

  Real evaluate_local(int j, const Real &xi) const {
    Real v = 0;
    for (int k = 0; k <= degree_; ++k) v += coeffs_(j, k) * ModalBasis<Real>::value(k, xi);
    return v;
  }

  Real evaluate(const Real &x) const {
    auto [j, xi] = mesh_.locate(x);
    return evaluate_local(j, xi);
  }

  bool finite() const { return is_finite(coeffs_); }

 private:
  Mesh<Real> mesh_;
  int degree_;
  Coeffs<Real> coeffs_;
  Real time_;
};

/// Element-wise L2 projection using a (p+2)-point Gauss rule per element.
template <class Real, class Fn>
DGSolution<Real> l2_project(Fn &&fn, const Mesh<Real> &mesh, int degree, Real time = Real(0)) {
  DGSolution<Real> sol(mesh, degree, time);
  const auto rule = numerics::gauss_legendre_rule<Real>(degree + 2);
  std::vector<Real> basis(rule.size() * (degree + 1));
  for (std::size_t q = 0; q < rule.size(); ++q)
    for (int k = 0; k <= degree; ++k) basis[q * (degree + 1) + k] = ModalBasis<Real>::value(k, rule.nodes[q]);
  for (int j = 0; j < mesh.size(); ++j)
    for (std::size_t q = 0; q < rule.size(); ++q) {
      const Real v = rule.weights[q] * fn(mesh.point(j, rule.nodes[q]));
      for (int k = 0; k <= degree; ++k) sol.coeffs()(j, k) += v * basis[q * (degree + 1) + k];
    }
  return sol;
}

/// sqrt(sum_j int_{I_j} (u_h - exact)^2 dx) with a (p+3)-point Gauss rule.
template <class Real, class Fn>
Real l2_error(const DGSolution<Real> &sol, Fn &&exact) {
  using std::sqrt;
  const auto &mesh = sol.mesh();
  const auto rule = numerics::gauss_legendre_rule<Real>(sol.degree() + 3);
  Real sum = 0;
  for (int j = 0; j < mesh.size(); ++j)
    for (std::size_t q = 0; q < rule.size(); ++q) {
      Real e = sol.evaluate_local(j, rule.nodes[q]) - exact(mesh.point(j, rule.nodes[q]));
      sum += rule.weights[q] * e * e;
    }
  return sqrt(sum * mesh.dx() / 2);
}

/// Integral of u_h over the domain (mean mode only).
template <class Real>
Real total_mass(const DGSolution<Real> &sol) {
  Real s = 0;
  for (int j = 0; j < sol.mesh().size(); ++j) s += sol.coeffs()(j, 0);
  // int_{-1}^{1} phi_0 = sqrt(2); dx/2 Jacobian
  return s * ModalBasis<Real>::scale(0) * Real(2) * sol.mesh().dx() / 2;
}

/// Discrete L2 norm of a coefficient array, as the L2 norm of the function
/// it represents on a mesh with element width dx.
template <class Real>
Real coefficient_norm(const Coeffs<Real> &c, const Real &dx) {
  using std::sqrt;
  return sqrt(c.squaredNorm() * dx / 2);
}

}  // namespace dgtime::dg
