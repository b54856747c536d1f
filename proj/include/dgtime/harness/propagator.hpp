#pragma once

#include <cmath>
#include <stdexcept>

#include "dgtime/dg/flux.hpp"
#include "dgtime/dg/solution.hpp"
#include "dgtime/harness/integrate.hpp"
#include "dgtime/scalar.hpp"

namespace dgtime::harness {

/// Exact evolution of single-Fourier-mode data under a linear,
/// translation-invariant scheme (constant-speed advection with any
/// fixed-iteration stepper).
///
/// Such data has element coefficients c_j = Re(e^{i theta j} v), theta =
/// 2 pi m / N, and one step maps v to G v for a (p+1)x(p+1) complex matrix
/// G. G is sampled by stepping the basis states with the real integrator;
/// n steps are then G^n, formed by repeated squaring. The result is the
/// same discrete solution the stepper would produce, up to rounding.
template <class Real>
class FourierPropagator {
 public:
  FourierPropagator(dg::Mesh<Real> mesh, int degree, dg::FluxSpec<Real> flux, IntegratorSpec spec,
                    int wavenumber = 1)
      : mesh_(std::move(mesh)), p_(degree), flux_(std::move(flux)), spec_(spec), m_(wavenumber) {
    if (flux_.kind != dg::FluxKind::LinearAdvection)
      throw std::invalid_argument("FourierPropagator: needs constant-speed linear advection");
    if (spec_.adaptive()) throw std::invalid_argument("FourierPropagator: adaptive iterations are not linear");
    const int n = mesh_.size();
    if (n < 3 || (2 * m_) % n == 0) throw std::invalid_argument("FourierPropagator: mode not resolvable on mesh");
  }

  /// Real 2(p+1) x 2(p+1) form [[A, -B], [B, A]] of G = A + iB for step dt.
  Matrix<Real> step_matrix(const Real &dt) const {
    const int b = p_ + 1;
    Matrix<Real> S(2 * b, 2 * b);
    for (int k = 0; k < b; ++k) {
      Vector<Real> re = Vector<Real>::Zero(b), im = Vector<Real>::Zero(b);
      re(k) = 1;
      dg::DGSolution<Real> s(mesh_, p_, synthesize(re, im), Real(0));
      auto out = integrate(s, dt, Real(dt / mesh_.dx()), spec_, flux_);
      auto [a, bb] = analyse(out.coeffs());
      S.block(0, k, b, 1) = a;
      S.block(b, k, b, 1) = bb;
      S.block(0, b + k, b, 1) = -bb;
      S.block(b, b + k, b, 1) = a;
    }
    return S;
  }

  /// Evolves sol0 to T with dt = cfl dx and a shortened last step.
  dg::DGSolution<Real> evolve(const dg::DGSolution<Real> &sol0, const Real &T, const Real &cfl,
                              IntegrationStats *stats = nullptr) const {
    using std::sqrt;
    const int b = p_ + 1;
    auto [re, im] = analyse(sol0.coeffs());
    const Coeffs<Real> residual = synthesize(re, im) - sol0.coeffs();
    if (!(sqrt(residual.squaredNorm()) <= scaled_tolerance<Real>(1e-11) * (1 + sqrt(sol0.coeffs().squaredNorm()))))
      throw std::invalid_argument("FourierPropagator: initial data is not a single Fourier mode");

    const StepClock<Real> clock(sol0.time(), T);
    const Real nominal = cfl * mesh_.dx();
    const long steps = clock.uniform_steps(nominal);
    Vector<Real> v(2 * b);
    v << re, im;
    if (steps > 0) {
      const Real last = T - (sol0.time() + Real(steps - 1) * nominal);
      if (steps > 1) v = power(step_matrix(nominal), steps - 1) * v;
      v = step_matrix(last) * v;
    }
    if (stats) {
      stats->steps = steps;
      stats->rhs_evaluations = std::size_t(steps) * evaluations_per_step(spec_, p_);
      stats->total_sweeps = spec_.correction() ? steps * spec_.sweeps_for(p_) : 0;
    }
    return dg::DGSolution<Real>(mesh_, p_, synthesize(v.head(b), v.tail(b)), T);
  }

 private:
  Real theta(int j) const { return 2 * pi<Real>() * Real(m_) * Real(j) / Real(mesh_.size()); }

  Coeffs<Real> synthesize(const Vector<Real> &re, const Vector<Real> &im) const {
    using std::cos;
    using std::sin;
    Coeffs<Real> c(mesh_.size(), p_ + 1);
    for (int j = 0; j < mesh_.size(); ++j) {
      const Real cj = cos(theta(j)), sj = sin(theta(j));
      for (int k = 0; k <= p_; ++k) c(j, k) = cj * re(k) - sj * im(k);
    }
    return c;
  }

  std::pair<Vector<Real>, Vector<Real>> analyse(const Coeffs<Real> &c) const {
    using std::cos;
    using std::sin;
    Vector<Real> re = Vector<Real>::Zero(p_ + 1), im = Vector<Real>::Zero(p_ + 1);
    for (int j = 0; j < mesh_.size(); ++j) {
      const Real cj = cos(theta(j)), sj = sin(theta(j));
      for (int k = 0; k <= p_; ++k) {
        re(k) += cj * c(j, k);
        im(k) -= sj * c(j, k);
      }
    }
    const Real scale = Real(2) / Real(mesh_.size());
    return {re * scale, im * scale};
  }

  static Matrix<Real> power(Matrix<Real> base, long e) {
    Matrix<Real> result = Matrix<Real>::Identity(base.rows(), base.cols());
    while (e > 0) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return result;
  }

  dg::Mesh<Real> mesh_;
  int p_;
  dg::FluxSpec<Real> flux_;
  IntegratorSpec spec_;
  int m_;
};

}  // namespace dgtime::harness
