#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dgtime/scalar.hpp"

namespace dgtime::numerics {

/// Lagrange cardinal polynomials through a set of distinct nodes.
template <class Real>
class LagrangeBasis {
 public:
  explicit LagrangeBasis(std::vector<Real> nodes) : nodes_(std::move(nodes)) {
    if (nodes_.empty()) throw std::invalid_argument("LagrangeBasis: no nodes");
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      for (std::size_t j = i + 1; j < nodes_.size(); ++j)
        if (nodes_[i] == nodes_[j])
          throw std::invalid_argument("LagrangeBasis: repeated node");
  }

  int degree() const { return static_cast<int>(nodes_.size()) - 1; }
  std::size_t size() const { return nodes_.size(); }
  const std::vector<Real> &nodes() const { return nodes_; }

  Real value(std::size_t j, const Real &t) const {
    Real v = 1;
    for (std::size_t m = 0; m < nodes_.size(); ++m)
      if (m != j) v *= (t - nodes_[m]) / (nodes_[j] - nodes_[m]);
    return v;
  }

  Real derivative(std::size_t j, const Real &t) const {
    Real sum = 0;
    for (std::size_t k = 0; k < nodes_.size(); ++k) {
      if (k == j) continue;
      Real term = Real(1) / (nodes_[j] - nodes_[k]);
      for (std::size_t m = 0; m < nodes_.size(); ++m)
        if (m != j && m != k) term *= (t - nodes_[m]) / (nodes_[j] - nodes_[m]);
      sum += term;
    }
    return sum;
  }

  /// Interpolant of the given nodal values evaluated at t.
  Real interpolate(std::span<const Real> values, const Real &t) const {
    Real s = 0;
    for (std::size_t j = 0; j < nodes_.size(); ++j) s += values[j] * value(j, t);
    return s;
  }

 private:
  std::vector<Real> nodes_;
};

/// Value matrix V[i][j] = l_j(t_i) and derivative matrix D[i][j] = l_j'(t_i).
template <class Real>
std::pair<Matrix<Real>, Matrix<Real>> lagrange_matrices(const LagrangeBasis<Real> &basis,
                                                        std::span<const Real> points) {
  const auto rows = static_cast<Eigen::Index>(points.size());
  const auto cols = static_cast<Eigen::Index>(basis.size());
  Matrix<Real> V(rows, cols), D(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) {
      V(i, j) = basis.value(j, points[i]);
      D(i, j) = basis.derivative(j, points[i]);
    }
  return {std::move(V), std::move(D)};
}

}  // namespace dgtime::numerics
