#pragma once

#include "dgtime/scalar.hpp"

namespace dgtime::time {

enum class RKScheme { TVD_RK3, ClassicalRK4 };

/// Steppers work on any State with State + Real * State (scalars, Eigen
/// arrays). rhs is called as rhs(t, u) and must return a State.

/// Three-stage TVD Runge-Kutta step; stage times t, t + dt, t + dt/2.
template <class Real, class State, class Rhs>
State rk3_step(const State &u, const Real &t, const Real &dt, Rhs &&rhs) {
  const State u1 = u + dt * rhs(t, u);
  const State u2 = Real(3) / Real(4) * u + Real(1) / Real(4) * (u1 + dt * rhs(t + dt, u1));
  State out = Real(1) / Real(3) * u + Real(2) / Real(3) * (u2 + dt * rhs(t + dt / 2, u2));
  if (!is_finite(out)) throw IntegrationFailure("rk3_step: non-finite state", -1);
  return out;
}

/// Classical four-stage Runge-Kutta step.
template <class Real, class State, class Rhs>
State rk4_step(const State &u, const Real &t, const Real &dt, Rhs &&rhs) {
  const Real half = dt / 2;
  const State k1 = rhs(t, u);
  const State k2 = rhs(t + half, State(u + half * k1));
  const State k3 = rhs(t + half, State(u + half * k2));
  const State k4 = rhs(t + dt, State(u + dt * k3));
  State out = u + dt / Real(6) * (k1 + Real(2) * k2 + Real(2) * k3 + k4);
  if (!is_finite(out)) throw IntegrationFailure("rk4_step: non-finite state", -1);
  return out;
}

template <class Real, class State, class Rhs>
State rk_step(RKScheme scheme, const State &u, const Real &t, const Real &dt, Rhs &&rhs) {
  return scheme == RKScheme::TVD_RK3 ? rk3_step(u, t, dt, rhs) : rk4_step(u, t, dt, rhs);
}

inline int rk_stages(RKScheme scheme) { return scheme == RKScheme::TVD_RK3 ? 3 : 4; }

}  // namespace dgtime::time
