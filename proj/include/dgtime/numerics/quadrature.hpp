#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "dgtime/numerics/legendre.hpp"
#include "dgtime/scalar.hpp"

namespace dgtime::numerics {

enum class RuleKind { GaussLegendre, GaussRadauRight };

/// Nodes and weights on the reference interval [-1, 1].
template <class Real>
struct QuadratureRule {
  std::vector<Real> nodes;
  std::vector<Real> weights;
  RuleKind kind = RuleKind::GaussLegendre;
  int exact_degree = 0;

  std::size_t size() const { return nodes.size(); }

  template <class F>
  auto integrate(F &&f) const {
    using Value = decltype(f(nodes[0]));
    Value sum = weights[0] * f(nodes[0]);
    for (std::size_t i = 1; i < nodes.size(); ++i) sum += weights[i] * f(nodes[i]);
    return sum;
  }

  /// Integral over [lo, hi] by affine mapping.
  template <class F>
  auto integrate(F &&f, const Real &lo, const Real &hi) const {
    const Real half = (hi - lo) / 2, mid = (hi + lo) / 2;
    return half * integrate([&](const Real &t) { return f(mid + half * t); });
  }
};

namespace detail {

template <class Real>
void polish_newton(Real &x, auto &&residual_over_derivative) {
  using std::abs;
  const Real tol = 4 * epsilon<Real>();
  for (int it = 0; it < 100; ++it) {
    Real dx = residual_over_derivative(x);
    x -= dx;
    if (abs(dx) <= tol * (1 + abs(x))) {
      // one more step to land on the rounding floor
      x -= residual_over_derivative(x);
      return;
    }
  }
  throw std::runtime_error("quadrature: Newton iteration did not converge");
}

}  // namespace detail

template <class Real>
QuadratureRule<Real> gauss_legendre_rule(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre_rule: n must be >= 1, got " + std::to_string(n));
  using std::cos;
  QuadratureRule<Real> rule;
  rule.kind = RuleKind::GaussLegendre;
  rule.exact_degree = 2 * n - 1;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Tricomi-style initial guess, descending from +1
    Real x = cos(pi<Real>() * (Real(i) + Real(0.75)) / (Real(n) + Real(0.5)));
    if (n % 2 == 1 && i == half - 1) {
      x = 0;
    } else {
      detail::polish_newton(x, [n](const Real &t) {
        auto [p, d] = legendre(n, t);
        return p / d;
      });
    }
    auto [p, d] = legendre(n, x);
    Real w = Real(2) / ((1 - x * x) * d * d);
    rule.nodes[n - 1 - i] = x;
    rule.nodes[i] = -x;
    rule.weights[n - 1 - i] = w;
    rule.weights[i] = w;
  }
  return rule;
}

/// n-point right Gauss-Radau rule: nodes are the roots of P_n - P_{n-1},
/// the last of which is exactly 1.
template <class Real>
QuadratureRule<Real> gauss_radau_right_rule(int n) {
  if (n < 1) throw std::invalid_argument("gauss_radau_right_rule: n must be >= 1, got " + std::to_string(n));
  using std::cos;
  QuadratureRule<Real> rule;
  rule.kind = RuleKind::GaussRadauRight;
  rule.exact_degree = 2 * n - 2;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  rule.nodes[n - 1] = 1;
  rule.weights[n - 1] = Real(2) / Real(n * n);
  for (int j = 1; j < n; ++j) {
    // Chebyshev-Gauss-Radau guess; Newton on (P_n - P_{n-1}) / (1 - x)
    Real x = cos(Real(2 * j) * pi<Real>() / Real(2 * n - 1));
    detail::polish_newton(x, [n](const Real &t) {
      auto [pn, dn] = legendre(n, t);
      auto [pm, dm] = legendre(n - 1, t);
      Real q = pn - pm, dq = dn - dm;
      return Real(1) / (dq / q + Real(1) / (Real(1) - t));
    });
    auto [pm, dm] = legendre(n - 1, x);
    rule.nodes[n - 1 - j] = x;
    rule.weights[n - 1 - j] = (1 + x) / (Real(n * n) * pm * pm);
  }
  for (int i = 0; i + 1 < n; ++i)
    if (!(rule.nodes[i] < rule.nodes[i + 1]))
      throw std::runtime_error("gauss_radau_right_rule: nodes not strictly increasing");
  return rule;
}

}  // namespace dgtime::numerics
