#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dgtime/scalar.hpp"

namespace dgtime::time {

/// Coefficients of an explicit correction sweep over p+1 collocation nodes
/// tau_0 < ... < tau_p = 1 on the reference step [-1, 1]. One sweep maps
/// iterate k to k+1 by
///
///   u_0     = u_n + dt/2 sum_j Q(0, j) f_j^k
///   u_{m+1} = u_m + dt/2 c_m (f(u_m) - f_m^k) + dt/2 sum_j Q(m+1, j) f_j^k
///
/// where f_j^k = f(t_j, u_j^k). The predictor is forward Euler through the
/// nodes. Both the SDG and SDC schemes are instances of this form.
template <class Real>
struct CorrectionScheme {
  std::vector<Real> nodes;
  std::vector<Real> correction;  // c_m, m = 0..p-1
  Matrix<Real> quadrature;       // Q, (p+1) x (p+1)

  int degree() const { return static_cast<int>(nodes.size()) - 1; }

  Real node_time(const Real &tn, const Real &dt, int m) const { return tn + dt / 2 * (Real(1) + nodes[m]); }

  /// rhs evaluations of a step with the given number of sweeps.
  std::size_t evaluations_per_step(int sweeps) const {
    return std::size_t(degree() + 1) * std::size_t(1 + sweeps);
  }
};

/// Stage values of one iterate together with the cached right-hand sides.
/// f[p] is evaluated lazily: only the next sweep needs it.
template <class State>
struct SweepState {
  int iteration = 0;
  std::vector<State> u;
  std::vector<State> f;
  bool last_rhs_valid = false;
  std::size_t rhs_evaluations = 0;

  const State &last() const { return u.back(); }
};

/// Euler predictor: u_n -> u_0 -> ... -> u_p along the nodes.
template <class Real, class State, class Rhs>
SweepState<State> predict(const CorrectionScheme<Real> &scheme, const State &un, const Real &tn,
                          const Real &dt, Rhs &&rhs) {
  const int p = scheme.degree();
  SweepState<State> s;
  s.u.reserve(p + 1);
  s.f.reserve(p + 1);
  const State f_start = rhs(tn, un);
  ++s.rhs_evaluations;
  s.u.push_back(un + dt / 2 * (Real(1) + scheme.nodes[0]) * f_start);
  for (int m = 0; m < p; ++m) {
    s.f.push_back(rhs(scheme.node_time(tn, dt, m), s.u[m]));
    ++s.rhs_evaluations;
    const Real gap = dt / 2 * (scheme.nodes[m + 1] - scheme.nodes[m]);
    s.u.push_back(s.u[m] + gap * s.f[m]);
  }
  s.f.push_back(s.u[p]);  // placeholder until evaluated
  s.last_rhs_valid = false;
  return s;
}

/// Cheap insurance that the cached last-node rhs exists before a sweep.
template <class Real, class State, class Rhs>
void complete_rhs(const CorrectionScheme<Real> &scheme, SweepState<State> &s, const Real &tn, const Real &dt,
                  Rhs &&rhs) {
  if (s.last_rhs_valid) return;
  const int p = scheme.degree();
  s.f[p] = rhs(scheme.node_time(tn, dt, p), s.u[p]);
  ++s.rhs_evaluations;
  s.last_rhs_valid = true;
}

namespace detail {
template <class Real, class State>
State quadrature_row(const Matrix<Real> &q, int row, const std::vector<State> &f) {
  State acc = q(row, 0) * f[0];
  for (std::size_t j = 1; j < f.size(); ++j) acc += q(row, Eigen::Index(j)) * f[j];
  return acc;
}
}  // namespace detail

/// One correction sweep; returns iterate k+1.
template <class Real, class State, class Rhs>
SweepState<State> sweep(const CorrectionScheme<Real> &scheme, SweepState<State> s, const State &un,
                        const Real &tn, const Real &dt, Rhs &&rhs) {
  complete_rhs(scheme, s, tn, dt, rhs);
  const int p = scheme.degree();
  const Real half = dt / 2;
  SweepState<State> next;
  next.iteration = s.iteration + 1;
  next.rhs_evaluations = s.rhs_evaluations;
  next.u.reserve(p + 1);
  next.f.reserve(p + 1);
  next.u.push_back(un + half * detail::quadrature_row(scheme.quadrature, 0, s.f));
  for (int m = 0; m < p; ++m) {
    next.f.push_back(rhs(scheme.node_time(tn, dt, m), next.u[m]));
    ++next.rhs_evaluations;
    next.u.push_back(next.u[m] + half * scheme.correction[m] * (next.f[m] - s.f[m]) +
                     half * detail::quadrature_row(scheme.quadrature, m + 1, s.f));
  }
  next.f.push_back(next.u[p]);
  next.last_rhs_valid = false;
  return next;
}

template <class State>
void check_finite(const State &u, const char *who) {
  if (!is_finite(u)) throw IntegrationFailure(std::string(who) + ": non-finite state", -1);
}

/// Predictor followed by `sweeps` correction sweeps; returns u_{n,p}.
template <class Real, class State, class Rhs>
State correction_step(const CorrectionScheme<Real> &scheme, const State &un, const Real &tn, const Real &dt,
                      int sweeps, Rhs &&rhs) {
  if (sweeps < 0) throw std::invalid_argument("correction_step: negative sweep count");
  auto s = predict(scheme, un, tn, dt, rhs);
  for (int k = 0; k < sweeps; ++k) s = sweep(scheme, std::move(s), un, tn, dt, rhs);
  check_finite(s.last(), "correction_step");
  return s.last();
}

template <class State>
struct AdaptiveResult {
  State value;
  int sweeps = 0;
  std::size_t rhs_evaluations = 0;
};

/// Sweeps until norm(u_p^K - u_p^{K-1}) < tolerance or K = max_sweeps.
template <class Real, class State, class Rhs, class Norm>
AdaptiveResult<State> adaptive_correction_step(const CorrectionScheme<Real> &scheme, const State &un,
                                               const Real &tn, const Real &dt, const Real &tolerance,
                                               int max_sweeps, Rhs &&rhs, Norm &&norm) {
  if (!(tolerance > 0)) throw std::invalid_argument("adaptive_correction_step: tolerance must be > 0");
  if (max_sweeps < 1) throw std::invalid_argument("adaptive_correction_step: max_sweeps must be >= 1");
  auto s = predict(scheme, un, tn, dt, rhs);
  int k = 0;
  while (k < max_sweeps) {
    State previous = s.last();
    s = sweep(scheme, std::move(s), un, tn, dt, rhs);
    ++k;
    if (norm(State(s.last() - previous)) < tolerance) break;
  }
  check_finite(s.last(), "adaptive_correction_step");
  return {s.last(), k, s.rhs_evaluations};
}

}  // namespace dgtime::time
