#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include "dgtime/dg/flux.hpp"
#include "dgtime/dg/mesh.hpp"
#include "dgtime/scalar.hpp"

namespace dgtime::harness {

enum class ProblemKind { Linear, VariableCoefficient, Burgers };

std::string problem_name(ProblemKind kind);
ProblemKind parse_problem(const std::string &name);

/// Solution of u_t + (u^2/2)_x = 0 with u(x, 0) = sin x before the shock:
/// the root of u = sin(x - u t), by Newton from u = sin x.
template <class Real>
Real burgers_exact(const Real &x, const Real &t) {
  using std::abs;
  using std::cos;
  using std::sin;
  if (!(t >= 0) || !(t < 1)) throw std::invalid_argument("burgers_exact: need 0 <= t < 1");
  const Real tol = 32 * epsilon<Real>();
  Real u = sin(x);
  for (int it = 0; it < 50; ++it) {
    const Real s = sin(x - u * t);
    const Real r = u - s;
    if (abs(r) < tol) return u;
    u -= r / (1 + t * cos(x - u * t));
  }
  if (abs(u - sin(x - u * t)) < tol) return u;
  throw EvaluationFailure("burgers_exact: Newton iteration did not converge");
}

/// A periodic test problem with a known exact solution.
template <class Real>
struct Problem {
  ProblemKind kind = ProblemKind::Linear;
  Real a = 0, b = 1;
  Real final_time = 1;
  Real default_cfl = Real(0.1);
  dg::FluxSpec<Real> flux;
  std::function<Real(const Real &, const Real &)> exact;  // u(x, t)

  /// Burgers steps scale with the current wave speed: dt = cfl dx / alpha.
  bool speed_scaled_dt() const { return kind == ProblemKind::Burgers; }
  Real initial(const Real &x) const { return exact(x, Real(0)); }
};

/// Reported errors are root-mean-square over the domain,
/// sqrt(1/|Omega| int e^2), so they do not scale with the domain length.
template <class Real>
double reported_error(const Real &l2, const dg::Mesh<Real> &mesh) {
  using std::sqrt;
  return to_double(Real(l2 / sqrt(mesh.length())));
}

template <class Real>
Problem<Real> make_problem(ProblemKind kind) {
  using std::cos;
  using std::sin;
  Problem<Real> pr;
  pr.kind = kind;
  const Real two_pi = 2 * pi<Real>();
  switch (kind) {
    case ProblemKind::Linear:
      pr.flux = dg::FluxSpec<Real>::linear_advection(Real(1));
      pr.exact = [two_pi](const Real &x, const Real &t) { return sin(two_pi * (x - t)); };
      break;
    case ProblemKind::VariableCoefficient: {
      auto a = [two_pi](const Real &x, const Real &t) { return 2 + sin(two_pi * (x + t)); };
      auto g = [two_pi](const Real &x, const Real &t) {
        const Real plus = two_pi * (x + t), minus = two_pi * (x - t);
        return two_pi * cos(plus) * sin(minus) + two_pi * (1 + sin(plus)) * cos(minus);
      };
      auto exact = [two_pi](const Real &x, const Real &t) { return sin(two_pi * (x - t)); };
      pr.flux = dg::FluxSpec<Real>::variable_coefficient(a, g, exact);
      pr.exact = exact;
      pr.default_cfl = Real(0.05);
      break;
    }
    case ProblemKind::Burgers:
      pr.b = two_pi;
      pr.final_time = Real(0.5);
      pr.default_cfl = Real(0.05);
      pr.flux = dg::FluxSpec<Real>::burgers();
      pr.exact = [](const Real &x, const Real &t) { return burgers_exact(x, t); };
      break;
  }
  return pr;
}

}  // namespace dgtime::harness
