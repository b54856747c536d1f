#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <type_traits>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/float128.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

namespace dgtime {

/// Quadruple precision (IEEE binary128, ~34 significant digits).
using Extended = boost::multiprecision::float128;

enum class Precision { Standard, Extended };

template <class Real>
using Matrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
template <class Real>
using Vector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;
/// Per-element coefficient storage: one row per element.
template <class Real>
using Coeffs = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

template <class Real>
Real pi() {
  return boost::math::constants::pi<Real>();
}

template <class Real>
Real epsilon() {
  return std::numeric_limits<Real>::epsilon();
}

/// Tolerance scaled from its binary64 value to the unit roundoff of Real.
template <class Real>
Real scaled_tolerance(double binary64_tolerance) {
  return Real(binary64_tolerance) *
         (epsilon<Real>() / Real(std::numeric_limits<double>::epsilon()));
}

template <class Real>
double to_double(const Real &x) {
  return static_cast<double>(x);
}

template <class T>
concept EigenObject = std::is_base_of_v<Eigen::EigenBase<T>, T>;

template <class Real>
  requires(!EigenObject<Real>)
bool is_finite(const Real &x) {
  using std::isfinite;
  using boost::multiprecision::isfinite;
  return isfinite(x);
}

template <class Derived>
bool is_finite(const Eigen::MatrixBase<Derived> &x) {
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < x.cols(); ++j)
      if (!is_finite(x(i, j))) return false;
  return true;
}

inline const char *precision_name(Precision p) {
  return p == Precision::Standard ? "standard" : "extended";
}

/// Thrown when a time integrator produces non-finite values.
class IntegrationFailure : public std::runtime_error {
 public:
  IntegrationFailure(const std::string &what, long step)
      : std::runtime_error(what + " (step " + std::to_string(step) + ")"),
        step_(step) {}
  long step() const { return step_; }

 private:
  long step_;
};

/// Thrown when a tableau or kernel cannot be built (singular system).
class ConstructionFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when a direct linear solve is singular.
class SolverFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when a pointwise evaluation (e.g. an implicit exact solution)
/// fails to converge.
class EvaluationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dgtime
