#pragma once

#include <functional>
#include <stdexcept>
#include <utility>

#include "dgtime/scalar.hpp"

namespace dgtime::dg {

enum class FluxKind { LinearAdvection, VariableCoefficient, Burgers };

/// Physical flux f(u, x, t) of a scalar conservation law
/// u_t + f(u, x, t)_x = g(x, t).
template <class Real>
struct FluxSpec {
  using SpaceTimeFn = std::function<Real(const Real &, const Real &)>;

  FluxKind kind = FluxKind::LinearAdvection;
  Real speed = 1;
  SpaceTimeFn coefficient;  // a(x, t); VariableCoefficient only
  SpaceTimeFn source;       // g(x, t); may be empty
  SpaceTimeFn exact;        // optional exact solution

  static FluxSpec linear_advection(Real speed) {
    FluxSpec f;
    f.kind = FluxKind::LinearAdvection;
    f.speed = speed;
    return f;
  }

  static FluxSpec burgers() {
    FluxSpec f;
    f.kind = FluxKind::Burgers;
    return f;
  }

  static FluxSpec variable_coefficient(SpaceTimeFn a, SpaceTimeFn g, SpaceTimeFn exact = {}) {
    if (!a) throw std::invalid_argument("FluxSpec: variable coefficient needs a(x, t)");
    FluxSpec f;
    f.kind = FluxKind::VariableCoefficient;
    f.coefficient = std::move(a);
    f.source = std::move(g);
    f.exact = std::move(exact);
    return f;
  }

  bool has_source() const { return static_cast<bool>(source); }

  /// True when the flux depends on (x, t) only through a(x, t).
  bool space_time_dependent() const { return kind == FluxKind::VariableCoefficient; }

  Real value(const Real &u, const Real &x, const Real &t) const {
    switch (kind) {
      case FluxKind::LinearAdvection: return speed * u;
      case FluxKind::VariableCoefficient: return coefficient(x, t) * u;
      case FluxKind::Burgers: return u * u / 2;
    }
    return Real(0);
  }

  Real wave_speed(const Real &u, const Real &x, const Real &t) const {
    switch (kind) {
      case FluxKind::LinearAdvection: return speed;
      case FluxKind::VariableCoefficient: return coefficient(x, t);
      case FluxKind::Burgers: return u;
    }
    return Real(0);
  }
};

/// Lax-Friedrichs numerical flux 1/2 (f(u-) + f(u+) - alpha (u+ - u-)).
template <class Real>
Real lax_friedrichs(const Real &u_minus, const Real &u_plus, const FluxSpec<Real> &flux,
                    const Real &alpha, const Real &x, const Real &t) {
  return (flux.value(u_minus, x, t) + flux.value(u_plus, x, t) - alpha * (u_plus - u_minus)) / 2;
}

}  // namespace dgtime::dg
