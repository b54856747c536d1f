#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "dgtime/numerics/lagrange.hpp"
#include "dgtime/numerics/quadrature.hpp"

using namespace dgtime;
using namespace dgtime::numerics;

namespace {

// int_{-1}^{1} t^r dt
template <class Real>
Real monomial_integral(int r) {
  return r % 2 ? Real(0) : Real(2) / Real(r + 1);
}

template <class Real>
Real quad_moment(const QuadratureRule<Real> &rule, int r) {
  return rule.integrate([r](const Real &t) {
    Real v = 1;
    for (int i = 0; i < r; ++i) v *= t;
    return v;
  });
}

template <class Real>
void check_rule(const QuadratureRule<Real> &rule, int n, double tol) {
  using std::abs;
  REQUIRE(rule.size() == std::size_t(n));
  Real sum = 0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    CHECK(rule.weights[i] > 0);
    CHECK(rule.nodes[i] >= Real(-1));
    CHECK(rule.nodes[i] <= Real(1));
    if (i) CHECK(rule.nodes[i - 1] < rule.nodes[i]);
    sum += rule.weights[i];
  }
  CHECK(to_double(abs(sum - 2)) < 1e-14);
  for (int r = 0; r <= rule.exact_degree; ++r)
    CHECK(to_double(abs(quad_moment(rule, r) - monomial_integral<Real>(r))) < tol);
}

}  // namespace

TEST_CASE("Gauss-Legendre small rules") {
  auto one = gauss_legendre_rule<double>(1);
  CHECK(one.nodes[0] == doctest::Approx(0.0));
  CHECK(one.weights[0] == doctest::Approx(2.0));

  auto two = gauss_legendre_rule<double>(2);
  CHECK(two.nodes[0] == doctest::Approx(-1 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(two.nodes[1] == doctest::Approx(1 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(two.weights[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(two.weights[1] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(two.exact_degree == 3);

  CHECK_THROWS_AS(gauss_legendre_rule<double>(0), std::invalid_argument);
}

TEST_CASE("right Radau small rules") {
  auto one = gauss_radau_right_rule<double>(1);
  CHECK(one.nodes[0] == 1.0);
  CHECK(one.weights[0] == doctest::Approx(2.0));

  auto two = gauss_radau_right_rule<double>(2);
  CHECK(two.nodes[0] == doctest::Approx(-1.0 / 3).epsilon(1e-15));
  CHECK(two.nodes[1] == 1.0);
  CHECK(two.weights[0] == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(two.weights[1] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(two.exact_degree == 2);

  CHECK_THROWS_AS(gauss_radau_right_rule<double>(0), std::invalid_argument);
}

TEST_CASE("moment exactness for n = 1..12") {
  for (int n = 1; n <= 12; ++n) {
    CAPTURE(n);
    auto g = gauss_legendre_rule<double>(n);
    CHECK(g.exact_degree == 2 * n - 1);
    check_rule(g, n, 1e-13);
    auto r = gauss_radau_right_rule<double>(n);
    CHECK(r.exact_degree == 2 * n - 2);
    CHECK(r.nodes.back() == 1.0);
    check_rule(r, n, 1e-13);
  }
}

TEST_CASE("extended-precision rules reach binary128 accuracy") {
  for (int n : {2, 5, 9}) {
    CAPTURE(n);
    auto g = gauss_legendre_rule<Extended>(n);
    check_rule(g, n, 1e-30);
    auto r = gauss_radau_right_rule<Extended>(n);
    CHECK(r.nodes.back() == Extended(1));
    check_rule(r, n, 1e-30);
  }
}

TEST_CASE("Radau nodes are interior except the right endpoint") {
  for (int n = 2; n <= 8; ++n) {
    auto r = gauss_radau_right_rule<double>(n);
    for (int i = 0; i + 1 < n; ++i) {
      CHECK(r.nodes[i] > -1.0);
      CHECK(r.nodes[i] < 1.0);
    }
  }
}

TEST_CASE("mapped integration") {
  auto g = gauss_legendre_rule<double>(4);
  // int_0^2 x^3 dx = 4
  CHECK(g.integrate([](double x) { return x * x * x; }, 0.0, 2.0) == doctest::Approx(4.0).epsilon(1e-14));
}

TEST_CASE("Lagrange basis: cardinality, partition of unity, derivative rows") {
  for (int p = 1; p <= 6; ++p) {
    CAPTURE(p);
    const auto nodes = gauss_radau_right_rule<double>(p + 1).nodes;
    LagrangeBasis<double> basis(nodes);
    CHECK(basis.degree() == p);
    auto [V, D] = lagrange_matrices<double>(basis, nodes);
    CHECK((V - Matrix<double>::Identity(p + 1, p + 1)).cwiseAbs().maxCoeff() < 1e-14);

    std::vector<double> samples;
    for (int i = 0; i <= 20; ++i) samples.push_back(-1.0 + i * 0.1);
    auto [Vs, Ds] = lagrange_matrices<double>(basis, samples);
    for (Eigen::Index i = 0; i < Vs.rows(); ++i) {
      CHECK(std::abs(Vs.row(i).sum() - 1.0) < 1e-13);
      CHECK(std::abs(Ds.row(i).sum()) < 1e-12);
    }
  }
}

TEST_CASE("Lagrange basis on {-1/3, 1}") {
  LagrangeBasis<double> basis({-1.0 / 3, 1.0});
  CHECK(basis.value(0, -1.0) == doctest::Approx(1.5).epsilon(1e-15));
  // l_0(t) = 3 (1 - t) / 4
  CHECK(basis.value(0, 0.2) == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(basis.derivative(0, 0.7) == doctest::Approx(-0.75).epsilon(1e-15));
}

TEST_CASE("Lagrange interpolation reproduces polynomials of degree <= p") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> coef(-1, 1);
  for (int p = 1; p <= 6; ++p) {
    CAPTURE(p);
    const auto nodes = gauss_radau_right_rule<double>(p + 1).nodes;
    LagrangeBasis<double> basis(nodes);
    std::vector<double> c(p + 1);
    for (auto &v : c) v = coef(rng);
    auto poly = [&](double t) {
      double s = 0;
      for (int k = p; k >= 0; --k) s = s * t + c[k];
      return s;
    };
    std::vector<double> values;
    for (double t : nodes) values.push_back(poly(t));
    for (int i = 0; i < 100; ++i) {
      const double t = -1.0 + 2.0 * i / 99;
      CHECK(std::abs(basis.interpolate(values, t) - poly(t)) < 1e-12);
    }
  }
}

TEST_CASE("Lagrange basis rejects repeated nodes") {
  CHECK_THROWS_AS(LagrangeBasis<double>({0.0, 0.5, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(LagrangeBasis<double>(std::vector<double>{}), std::invalid_argument);
}
