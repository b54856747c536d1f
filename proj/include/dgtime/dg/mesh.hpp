#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "dgtime/scalar.hpp"

namespace dgtime::dg {

/// Uniform periodic partition of [a, b] into N elements.
template <class Real>
class Mesh {
 public:
  Mesh(Real a, Real b, int elements) : a_(a), b_(b), n_(elements) {
    if (!(a < b)) throw std::invalid_argument("Mesh: need a < b");
    if (elements < 1) throw std::invalid_argument("Mesh: need N >= 1, got " + std::to_string(elements));
    dx_ = (b_ - a_) / Real(n_);
  }

  const Real &a() const { return a_; }
  const Real &b() const { return b_; }
  int size() const { return n_; }
  const Real &dx() const { return dx_; }
  Real length() const { return b_ - a_; }

  /// Left interface x_{j-1/2} of element j; j = N gives b.
  Real interface(int j) const { return a_ + Real(j) * dx_; }
  Real center(int j) const { return a_ + (Real(j) + Real(0.5)) * dx_; }
  /// Physical point of reference coordinate xi in [-1, 1] on element j.
  Real point(int j, const Real &xi) const { return center(j) + xi * dx_ / 2; }

  int wrap(int j) const { return ((j % n_) + n_) % n_; }

  /// Element containing x (after periodic reduction) and its reference
  /// coordinate. Points on an interface belong to the element on the right.
  std::pair<int, Real> locate(Real x) const {
    using std::floor;
    const Real len = length();
    Real s = (x - a_) / len;
    s -= floor(s);
    Real pos = s * Real(n_);
    int j = static_cast<int>(floor(pos));
    if (j >= n_) j = n_ - 1;
    if (j < 0) j = 0;
    Real xi = 2 * (pos - Real(j)) - 1;
    return {j, xi};
  }

 private:
  Real a_, b_;
  int n_;
  Real dx_;
};

}  // namespace dgtime::dg
