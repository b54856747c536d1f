#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

#include "dgtime/dg/flux.hpp"
#include "dgtime/dg/operator.hpp"
#include "dgtime/dg/solution.hpp"
#include "dgtime/scalar.hpp"
#include "dgtime/time/correction.hpp"
#include "dgtime/time/runge_kutta.hpp"
#include "dgtime/time/sdc.hpp"
#include "dgtime/time/sdg.hpp"

namespace dgtime::harness {

enum class IntegratorKind { RK3, RK4, SDG, SDC, AdaptiveSDG, AdaptiveSDC };

std::string integrator_name(IntegratorKind kind);
IntegratorKind parse_integrator(const std::string &name);

/// Time integrator choice. Negative sweeps / max_sweeps mean 2p; a
/// non-positive tolerance selects default_adaptive_tolerance.
struct IntegratorSpec {
  IntegratorKind kind = IntegratorKind::SDG;
  int sweeps = -1;
  time::SDCVariant variant = time::SDCVariant::Corrected;
  double tolerance = 0;
  int max_sweeps = -1;

  static IntegratorSpec rk3() { return {IntegratorKind::RK3}; }
  static IntegratorSpec rk4() { return {IntegratorKind::RK4}; }
  static IntegratorSpec sdg(int sweeps = -1) { return {IntegratorKind::SDG, sweeps}; }
  static IntegratorSpec sdc(int sweeps = -1, time::SDCVariant v = time::SDCVariant::Corrected) {
    return {IntegratorKind::SDC, sweeps, v};
  }
  static IntegratorSpec adaptive_sdg(double tol = 0, int kmax = -1) {
    return {IntegratorKind::AdaptiveSDG, -1, time::SDCVariant::Corrected, tol, kmax};
  }
  static IntegratorSpec adaptive_sdc(double tol = 0, int kmax = -1) {
    return {IntegratorKind::AdaptiveSDC, -1, time::SDCVariant::Corrected, tol, kmax};
  }

  int sweeps_for(int p) const { return sweeps < 0 ? 2 * p : sweeps; }
  int max_sweeps_for(int p) const { return max_sweeps < 0 ? 2 * p : max_sweeps; }
  bool adaptive() const { return kind == IntegratorKind::AdaptiveSDG || kind == IntegratorKind::AdaptiveSDC; }
  bool correction() const { return kind != IntegratorKind::RK3 && kind != IntegratorKind::RK4; }
};

/// Default adaptive tolerance dx^(2p+1), the scale of the filtered error.
template <class Real>
Real default_adaptive_tolerance(const Real &dx, int p) {
  using std::pow;
  return pow(dx, 2 * p + 1);
}

struct IntegrationStats {
  long steps = 0;
  std::size_t rhs_evaluations = 0;
  long total_sweeps = 0;  // correction sweeps over all steps
};

/// rhs evaluations of one fixed-iteration step.
inline std::size_t evaluations_per_step(const IntegratorSpec &spec, int p) {
  switch (spec.kind) {
    case IntegratorKind::RK3: return 3;
    case IntegratorKind::RK4: return 4;
    default: return std::size_t(p + 1) * std::size_t(1 + spec.sweeps_for(p));
  }
}

/// Step controller: dt = cfl dx (or cfl dx / alpha when speed_scaled) with
/// the last step shortened to land on T. A remainder below a few ulps of T
/// is absorbed into the previous step.
template <class Real>
class StepClock {
 public:
  StepClock(const Real &t0, const Real &T) : t0_(t0), T_(T) {}

  /// Number of uniform steps of nominal size dt.
  long uniform_steps(const Real &dt) const {
    using std::ceil;
    const Real span = T_ - t0_;
    if (!(span > 0)) return 0;
    const Real ratio = span / dt;
    long n = static_cast<long>(ceil(to_double(Real(ratio - slack() * ratio))));
    return n < 1 ? 1 : n;
  }

  bool finished(const Real &t) const { return !(t < T_ - slack() * (1 + abs_(T_))); }

  /// Clip a proposed step so that t + dt does not overshoot T.
  Real clip(const Real &t, const Real &dt) const {
    if (t + dt >= T_ - slack() * (1 + abs_(T_))) return T_ - t;
    return dt;
  }

 private:
  static Real slack() { return 64 * epsilon<Real>(); }
  static Real abs_(const Real &x) { return x < 0 ? Real(-x) : x; }
  Real t0_, T_;
};

/// Advances sol0 to time T with the method of lines.
template <class Real>
dg::DGSolution<Real> integrate(const dg::DGSolution<Real> &sol0, const Real &T, const Real &cfl,
                               const IntegratorSpec &spec, const dg::FluxSpec<Real> &flux,
                               bool speed_scaled_dt = false, IntegrationStats *stats = nullptr) {
  if (!(cfl > 0)) throw std::invalid_argument("integrate: cfl must be > 0");
  if (T < sol0.time()) throw std::invalid_argument("integrate: T is before the initial time");
  const int p = sol0.degree();
  const auto &mesh = sol0.mesh();
  dg::SemiDiscreteOperator<Real> op(mesh, p, flux);
  const StepClock<Real> clock(sol0.time(), T);

  time::CorrectionScheme<Real> scheme;
  if (spec.kind == IntegratorKind::SDG || spec.kind == IntegratorKind::AdaptiveSDG)
    scheme = time::build_sdg_tableau<Real>(p).scheme();
  else if (spec.kind == IntegratorKind::SDC || spec.kind == IntegratorKind::AdaptiveSDC)
    scheme = time::build_sdc_tableau<Real>(p, spec.variant).scheme();

  const int sweeps = spec.sweeps_for(p);
  const int kmax = spec.max_sweeps_for(p);
  Real tolerance = spec.tolerance > 0 ? Real(spec.tolerance) : default_adaptive_tolerance(mesh.dx(), p);
  if (spec.correction() && !spec.adaptive() && sweeps < 0)
    throw std::invalid_argument("integrate: negative sweep count");
  if (spec.adaptive() && kmax < 1) throw std::invalid_argument("integrate: max sweeps must be >= 1");

  auto norm = [&](const Coeffs<Real> &d) { return dg::coefficient_norm(d, mesh.dx()); };
  auto rhs = [&op](const Real &t, const Coeffs<Real> &c) { return op(t, c); };

  Coeffs<Real> u = sol0.coeffs();
  Real t = sol0.time();
  long n = 0, total_sweeps = 0;
  const Real nominal = cfl * mesh.dx();
  const long uniform = speed_scaled_dt ? -1 : clock.uniform_steps(nominal);

  auto advance = [&](const Real &dt) {
    switch (spec.kind) {
      case IntegratorKind::RK3: u = time::rk3_step(u, t, dt, rhs); break;
      case IntegratorKind::RK4: u = time::rk4_step(u, t, dt, rhs); break;
      case IntegratorKind::SDG:
      case IntegratorKind::SDC:
        u = time::correction_step(scheme, u, t, dt, sweeps, rhs);
        total_sweeps += sweeps;
        break;
      case IntegratorKind::AdaptiveSDG:
      case IntegratorKind::AdaptiveSDC: {
        auto r = time::adaptive_correction_step(scheme, u, t, dt, tolerance, kmax, rhs, norm);
        u = std::move(r.value);
        total_sweeps += r.sweeps;
        break;
      }
    }
  };

  try {
    if (speed_scaled_dt) {
      while (!clock.finished(t)) {
        const Real alpha = op.max_wave_speed(t, u);
        if (!(alpha > 0)) throw IntegrationFailure("integrate: zero wave speed", n);
        const Real dt = clock.clip(t, nominal / alpha);
        advance(dt);
        t = t + dt;
        ++n;
      }
    } else {
      const Real t0 = sol0.time();
      for (n = 0; n < uniform; ++n) {
        const Real tn = t0 + Real(n) * nominal;
        const Real dt = n + 1 == uniform ? Real(T - tn) : nominal;
        t = tn;
        advance(dt);
      }
      t = T;
    }
  } catch (const IntegrationFailure &) {
    throw IntegrationFailure(std::string("integrate: ") + integrator_name(spec.kind) + " produced a non-finite state", n);
  }

  if (stats) {
    stats->steps = n;
    stats->rhs_evaluations = op.evaluations();
    stats->total_sweeps = total_sweeps;
  }
  return dg::DGSolution<Real>(mesh, p, std::move(u), t);
}

}  // namespace dgtime::harness
