#pragma once

#include <algorithm>
#include <cmath>
#include <ostream>
#include <vector>

#include "dgtime/dg/io.hpp"
#include "dgtime/dg/solution.hpp"
#include "dgtime/numerics/quadrature.hpp"
#include "dgtime/scalar.hpp"
#include "dgtime/siac/kernel.hpp"

namespace dgtime::siac {

/// Weights of the mesh-aligned convolution at a fixed reference point eta:
///   u*(x_j + h eta / 2) = sum_i sum_k W(i + reach, k) c_{j+i, k}
/// with W(i, k) = 1/2 int_{-1}^{1} K(-i + (eta - zeta) / 2) phi_k(zeta) dzeta.
/// Each integral is split at the kernel breakpoints so the Gauss rule is exact.
template <class Real>
class ConvolutionStencil {
 public:
  ConvolutionStencil(const SIACKernel<Real> &kernel, int degree, const Real &eta)
      : degree_(degree), eta_(eta) {
    using std::ceil;
    reach_ = static_cast<int>(ceil(to_double(kernel.half_width()))) + 1;
    const auto rule = numerics::gauss_legendre_rule<Real>(degree + 2);
    const auto kb = kernel.breakpoints();
    weights_ = Matrix<Real>::Zero(2 * reach_ + 1, degree + 1);
    std::vector<Real> cuts;
    for (int i = -reach_; i <= reach_; ++i) {
      cuts.assign({Real(-1), Real(1)});
      for (const auto &b : kb) {
        const Real z = eta - 2 * (b + Real(i));
        if (z > Real(-1) && z < Real(1)) cuts.push_back(z);
      }
      std::sort(cuts.begin(), cuts.end());
      for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
        if (!(cuts[s] < cuts[s + 1])) continue;
        for (int k = 0; k <= degree; ++k)
          weights_(i + reach_, k) += rule.integrate(
              [&](const Real &zeta) {
                return kernel(Real(Real(-i) + (eta - zeta) / 2)) * dg::ModalBasis<Real>::value(k, zeta);
              },
              cuts[s], cuts[s + 1]) / 2;
      }
    }
  }

  int reach() const { return reach_; }
  const Real &eta() const { return eta_; }
  const Matrix<Real> &weights() const { return weights_; }

  Real apply(const dg::DGSolution<Real> &sol, int j) const {
    const auto &mesh = sol.mesh();
    Real v = 0;
    for (int i = -reach_; i <= reach_; ++i) {
      const int e = mesh.wrap(j + i);
      for (int k = 0; k <= degree_; ++k) v += weights_(i + reach_, k) * sol.coeffs()(e, k);
    }
    return v;
  }

 private:
  int degree_;
  Real eta_;
  int reach_ = 0;
  Matrix<Real> weights_;
};

/// u*(x) for the kernel of degree sol.degree() scaled by h = dx.
template <class Real>
Real postprocess_point(const dg::DGSolution<Real> &sol, const Real &x) {
  const SIACKernel<Real> kernel(sol.degree());
  const auto [j, eta] = sol.mesh().locate(x);
  return ConvolutionStencil<Real>(kernel, sol.degree(), eta).apply(sol, j);
}

/// Filtered solution evaluated on a fixed set of reference points per element.
template <class Real>
class PostProcessor {
 public:
  PostProcessor(int degree, std::vector<Real> etas) : kernel_(degree) {
    for (const auto &eta : etas) stencils_.emplace_back(kernel_, degree, eta);
  }

  const SIACKernel<Real> &kernel() const { return kernel_; }
  const std::vector<ConvolutionStencil<Real>> &stencils() const { return stencils_; }

  Real value(const dg::DGSolution<Real> &sol, int j, std::size_t point) const {
    return stencils_[point].apply(sol, j);
  }

 private:
  SIACKernel<Real> kernel_;
  std::vector<ConvolutionStencil<Real>> stencils_;
};

/// Reference points and weights of a (p+3)-point Gauss rule on each half of
/// [-1, 1]; u* may have a breakpoint at the element centre.
template <class Real>
numerics::QuadratureRule<Real> split_element_rule(int degree) {
  const auto g = numerics::gauss_legendre_rule<Real>(degree + 3);
  numerics::QuadratureRule<Real> r;
  r.kind = g.kind;
  r.exact_degree = g.exact_degree;
  for (int half = 0; half < 2; ++half) {
    const Real shift = half == 0 ? Real(-0.5) : Real(0.5);
    for (std::size_t q = 0; q < g.size(); ++q) {
      r.nodes.push_back(shift + g.nodes[q] / 2);
      r.weights.push_back(g.weights[q] / 2);
    }
  }
  return r;
}

template <class Real>
struct PointwiseSample {
  Real x;
  Real dg_error;
  Real filtered_error;
};

template <class Real>
struct FilteredErrors {
  Real l2 = 0;
  std::vector<PointwiseSample<Real>> samples;
};

/// L2 error of u* and |u_h - exact|, |u* - exact| at p+2 Gauss points per element.
template <class Real, class Fn>
FilteredErrors<Real> postprocess_errors(const dg::DGSolution<Real> &sol, Fn &&exact, bool with_samples = true) {
  using std::abs;
  using std::sqrt;
  const int p = sol.degree();
  const auto &mesh = sol.mesh();
  const auto rule = split_element_rule<Real>(p);
  const PostProcessor<Real> pp(p, rule.nodes);
  FilteredErrors<Real> out;
  Real sum = 0;
  for (int j = 0; j < mesh.size(); ++j)
    for (std::size_t q = 0; q < rule.size(); ++q) {
      const Real e = pp.value(sol, j, q) - exact(mesh.point(j, rule.nodes[q]));
      sum += rule.weights[q] * e * e;
    }
  out.l2 = sqrt(sum * mesh.dx() / 2);
  if (with_samples) {
    const auto g = numerics::gauss_legendre_rule<Real>(p + 2);
    const PostProcessor<Real> sp(p, g.nodes);
    for (int j = 0; j < mesh.size(); ++j)
      for (std::size_t q = 0; q < g.size(); ++q) {
        const Real x = mesh.point(j, g.nodes[q]);
        const Real u = exact(x);
        out.samples.push_back({x, abs(sol.evaluate_local(j, g.nodes[q]) - u), abs(sp.value(sol, j, q) - u)});
      }
  }
  return out;
}

/// int u* over the periodic domain.
template <class Real>
Real filtered_mass(const dg::DGSolution<Real> &sol) {
  const auto rule = split_element_rule<Real>(sol.degree());
  const PostProcessor<Real> pp(sol.degree(), rule.nodes);
  Real s = 0;
  for (int j = 0; j < sol.mesh().size(); ++j)
    for (std::size_t q = 0; q < rule.size(); ++q) s += rule.weights[q] * pp.value(sol, j, q);
  return s * sol.mesh().dx() / 2;
}

/// CSV rows "x,dg_error,filtered_error".
template <class Real>
void write_pointwise_csv(std::ostream &os, const std::vector<PointwiseSample<Real>> &samples) {
  os << "x,dg_error,filtered_error\n";
  for (const auto &s : samples)
    os << dg::format_real(to_double(s.x)) << ',' << dg::format_real(to_double(s.dg_error)) << ','
       << dg::format_real(to_double(s.filtered_error)) << '\n';
}

}  // namespace dgtime::siac
