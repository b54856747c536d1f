#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "dgtime/dg/flux.hpp"
#include "dgtime/dg/mesh.hpp"
#include "dgtime/dg/solution.hpp"
#include "dgtime/numerics/quadrature.hpp"
#include "dgtime/scalar.hpp"

namespace dgtime::dg {

/// Traces (u-, u+) at interface x_{j-1/2}, 0 <= j <= N, periodic.
template <class Real>
std::pair<Real, Real> eval_traces(const DGSolution<Real> &sol, int j) {
  const auto &mesh = sol.mesh();
  const int left = mesh.wrap(j - 1), right = mesh.wrap(j);
  return {sol.evaluate_local(left, Real(1)), sol.evaluate_local(right, Real(-1))};
}

/// The DG spatial operator L_h: maps modal coefficients to their time
/// derivative. Volume integrals use a (p+2)-point Gauss rule; interfaces
/// use the Lax-Friedrichs flux with alpha = max |f'(u)| over the solution
/// values, recomputed per call. For f = a(x, t) u that maximum is |a| at
/// the interface itself, so the flux reduces to upwinding there.
///
/// An instance memoizes the space-time fields of a variable coefficient
/// (a(x, t) at quadrature points and the projected source) for the last few
/// distinct times, so it must not be shared between threads.
template <class Real>
class SemiDiscreteOperator {
 public:
  SemiDiscreteOperator(Mesh<Real> mesh, int degree, FluxSpec<Real> flux)
      : mesh_(std::move(mesh)), degree_(degree), flux_(std::move(flux)),
        rule_(numerics::gauss_legendre_rule<Real>(degree + 2)) {
    const auto nq = static_cast<Eigen::Index>(rule_.size());
    const Eigen::Index nb = degree_ + 1;
    values_.resize(nq, nb);
    weighted_derivs_.resize(nq, nb);
    weighted_values_.resize(nq, nb);
    right_trace_.resize(nb);
    left_trace_.resize(nb);
    for (Eigen::Index q = 0; q < nq; ++q)
      for (Eigen::Index k = 0; k < nb; ++k) {
        values_(q, k) = ModalBasis<Real>::value(int(k), rule_.nodes[q]);
        weighted_values_(q, k) = rule_.weights[q] * values_(q, k);
        weighted_derivs_(q, k) = rule_.weights[q] * ModalBasis<Real>::derivative(int(k), rule_.nodes[q]);
      }
    for (Eigen::Index k = 0; k < nb; ++k) {
      right_trace_(k) = ModalBasis<Real>::right_trace(int(k));
      left_trace_(k) = ModalBasis<Real>::left_trace(int(k));
    }
    quad_x_.resize(mesh_.size(), nq);
    for (int j = 0; j < mesh_.size(); ++j)
      for (Eigen::Index q = 0; q < nq; ++q) quad_x_(j, q) = mesh_.point(j, rule_.nodes[q]);
    cache_.resize(std::size_t(degree_) + 3);
  }

  const Mesh<Real> &mesh() const { return mesh_; }
  int degree() const { return degree_; }
  const FluxSpec<Real> &flux() const { return flux_; }

  std::size_t evaluations() const { return evaluations_; }
  void reset_evaluations() { evaluations_ = 0; }

  Coeffs<Real> operator()(const Real &t, const Coeffs<Real> &c) const {
    using std::abs;
    ++evaluations_;
    const int n = mesh_.size();
    const Eigen::Index nq = values_.rows();
    const Fields *fields = flux_.space_time_dependent() || flux_.has_source() ? &fields_at(t) : nullptr;

    Coeffs<Real> uq = c * values_.transpose();
    Vector<Real> ur = c * right_trace_;
    Vector<Real> ul = c * left_trace_;
    Coeffs<Real> fq(n, nq);
    for (int j = 0; j < n; ++j)
      for (Eigen::Index q = 0; q < nq; ++q)
        fq(j, q) = fields && flux_.space_time_dependent() ? fields->a_quad(j, q) * uq(j, q)
                                                          : flux_.value(uq(j, q), quad_x_(j, q), t);

    // numerical flux at x_{i-1/2}, i = 0..N-1
    Vector<Real> fhat(n);
    for (int i = 0; i < n; ++i) {
      const Real &um = ur(mesh_.wrap(i - 1));
      const Real &up = ul(i);
      if (fields && flux_.space_time_dependent()) {
        const Real &a = fields->a_face(i);
        fhat(i) = (a * um + a * up - abs(a) * (up - um)) / 2;
      } else {
        const Real x = mesh_.interface(i);
        const Real alpha = std::max(abs(flux_.wave_speed(um, x, t)), abs(flux_.wave_speed(up, x, t)));
        fhat(i) = lax_friedrichs(um, up, flux_, alpha, x, t);
      }
    }

    Coeffs<Real> rate = fq * weighted_derivs_;
    const Real scale = Real(2) / mesh_.dx();
    for (int j = 0; j < n; ++j) {
      const Real &out = fhat(mesh_.wrap(j + 1));
      const Real &in = fhat(j);
      for (int k = 0; k <= degree_; ++k)
        rate(j, k) = scale * (rate(j, k) - out * right_trace_(k) + in * left_trace_(k));
    }
    if (fields && flux_.has_source()) rate += fields->source;
    return rate;
  }

  /// alpha = max |f'(u)| over quadrature points and interface traces.
  Real max_wave_speed(const Real &t, const Coeffs<Real> &c) const {
    const Fields *fields = flux_.space_time_dependent() ? &fields_at(t) : nullptr;
    Coeffs<Real> uq = c * values_.transpose();
    Vector<Real> ur = c * right_trace_;
    Vector<Real> ul = c * left_trace_;
    return wave_speed_bound(t, uq, ul, ur, fields);
  }

 private:
  struct Fields {
    bool valid = false;
    Real t = 0;
    Coeffs<Real> a_quad;
    Vector<Real> a_face;
    Coeffs<Real> source;
  };

  Real wave_speed_bound(const Real &t, const Coeffs<Real> &uq, const Vector<Real> &ul,
                        const Vector<Real> &ur, const Fields *fields) const {
    using std::abs;
    switch (flux_.kind) {
      case FluxKind::LinearAdvection: return abs(flux_.speed);
      case FluxKind::VariableCoefficient:
        return std::max(fields->a_quad.cwiseAbs().maxCoeff(), fields->a_face.cwiseAbs().maxCoeff());
      case FluxKind::Burgers: {
        Real m = uq.size() ? Real(uq.cwiseAbs().maxCoeff()) : Real(0);
        m = std::max(m, Real(ul.cwiseAbs().maxCoeff()));
        return std::max(m, Real(ur.cwiseAbs().maxCoeff()));
      }
    }
    (void)t;
    return Real(0);
  }

  const Fields &fields_at(const Real &t) const {
    for (const auto &f : cache_)
      if (f.valid && f.t == t) return f;
    Fields &f = cache_[next_slot_];
    next_slot_ = (next_slot_ + 1) % cache_.size();
    const int n = mesh_.size();
    const Eigen::Index nq = values_.rows();
    f.valid = true;
    f.t = t;
    if (flux_.space_time_dependent()) {
      f.a_quad.resize(n, nq);
      f.a_face.resize(n);
      for (int j = 0; j < n; ++j) {
        for (Eigen::Index q = 0; q < nq; ++q) f.a_quad(j, q) = flux_.coefficient(quad_x_(j, q), t);
        f.a_face(j) = flux_.coefficient(mesh_.interface(j), t);
      }
    }
    if (flux_.has_source()) {
      Coeffs<Real> gq(n, nq);
      for (int j = 0; j < n; ++j)
        for (Eigen::Index q = 0; q < nq; ++q) gq(j, q) = flux_.source(quad_x_(j, q), t);
      f.source = gq * weighted_values_;
    }
    return f;
  }

  Mesh<Real> mesh_;
  int degree_;
  FluxSpec<Real> flux_;
  numerics::QuadratureRule<Real> rule_;
  Matrix<Real> values_;           // phi_k(xi_q)
  Matrix<Real> weighted_values_;  // w_q phi_k(xi_q)
  Matrix<Real> weighted_derivs_;  // w_q phi_k'(xi_q)
  Vector<Real> right_trace_, left_trace_;
  Coeffs<Real> quad_x_;
  mutable std::vector<Fields> cache_;
  mutable std::size_t next_slot_ = 0;
  mutable std::size_t evaluations_ = 0;
};

template <class Real>
Real max_wave_speed(const DGSolution<Real> &sol, const FluxSpec<Real> &flux) {
  SemiDiscreteOperator<Real> op(sol.mesh(), sol.degree(), flux);
  return op.max_wave_speed(sol.time(), sol.coeffs());
}

/// L_h(t, u_h) as a coefficient array of the same shape as sol.coeffs().
template <class Real>
Coeffs<Real> semidiscrete_rhs(const DGSolution<Real> &sol, const Real &t, const FluxSpec<Real> &flux) {
  SemiDiscreteOperator<Real> op(sol.mesh(), sol.degree(), flux);
  return op(t, sol.coeffs());
}

}  // namespace dgtime::dg
