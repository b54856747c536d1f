#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <string>

#include "dgtime/dg/solution.hpp"
#include "dgtime/harness/integrate.hpp"
#include "dgtime/harness/problems.hpp"
#include "dgtime/numerics/quadrature.hpp"
#include "dgtime/siac/bspline.hpp"
#include "dgtime/siac/filter.hpp"
#include "dgtime/siac/kernel.hpp"

using namespace dgtime;
using namespace dgtime::siac;

namespace {

// Integral of g over [lo, hi] with a composite 10-point Gauss rule on unit
// cells; exact for piecewise polynomials with integer-offset breakpoints.
template <class Fn>
double piecewise_integral(Fn &&g, double lo, double hi, double cell = 0.5) {
  const auto rule = numerics::gauss_legendre_rule<double>(10);
  double s = 0;
  for (double a = lo; a < hi - 1e-12; a += cell) s += rule.integrate(g, a, std::min(a + cell, hi));
  return s;
}

}  // namespace

TEST_CASE("B-spline values") {
  CHECK(bspline_eval(1, 0.4) == 1.0);
  CHECK(bspline_eval(1, 0.6) == 0.0);
  CHECK(bspline_eval(1, -0.5) == 1.0);
  CHECK(bspline_eval(1, 0.5) == 0.0);
  CHECK(bspline_eval(2, 0.0) == doctest::Approx(1.0));
  CHECK(bspline_eval(2, 0.5) == doctest::Approx(0.5));
  CHECK(bspline_eval(3, 0.0) == doctest::Approx(0.75));
  CHECK(bspline_eval(4, 0.0) == doctest::Approx(2.0 / 3));
  CHECK_THROWS_AS(bspline_eval(0, 0.0), std::invalid_argument);
  for (int l = 1; l <= 6; ++l) {
    CAPTURE(l);
    CHECK(bspline_eval(l, l / 2.0 + 0.01) == 0.0);
    CHECK(bspline_eval(l, -l / 2.0 - 0.01) == 0.0);
    const double mass = piecewise_integral([l](double x) { return bspline_eval(l, x); }, -l / 2.0, l / 2.0);
    CHECK(std::abs(mass - 1) < 1e-13);
    for (double x = -l / 2.0; x <= l / 2.0; x += 0.037) CHECK(bspline_eval(l, x) >= 0.0);
    CHECK(bspline_breakpoints<double>(l).size() == std::size_t(l + 1));
  }
}

TEST_CASE("kernel coefficients") {
  auto c1 = kernel_coefficients<double>(1);
  REQUIRE(c1.size() == 3);
  CHECK(c1[0] == doctest::Approx(-1.0 / 12).epsilon(1e-13));
  CHECK(c1[1] == doctest::Approx(7.0 / 6).epsilon(1e-13));
  CHECK(c1[2] == doctest::Approx(-1.0 / 12).epsilon(1e-13));
  for (int p = 1; p <= 4; ++p) {
    CAPTURE(p);
    auto c = kernel_coefficients<double>(p);
    double sum = 0;
    for (double v : c) sum += v;
    CHECK(std::abs(sum - 1) < 1e-12);
    for (int g = 0; g <= 2 * p; ++g) CHECK(std::abs(c[g] - c[2 * p - g]) < 1e-12);
    SIACKernel<double> k(p);
    CHECK(k.half_width() == (3 * p + 1) / 2.0);
    CHECK(k(k.half_width() + 1e-9) == 0.0);
    CHECK(k(-k.half_width() - 1e-9) == 0.0);
  }
  CHECK_THROWS_AS(kernel_coefficients<double>(0), std::invalid_argument);
}

TEST_CASE("kernel reproduces polynomials under brute-force convolution") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> d(-2, 2);
  for (int p = 1; p <= 4; ++p) {
    SIACKernel<double> k(p);
    const double w = k.half_width();
    for (int trial = 0; trial < 20; ++trial) {
      const double x0 = d(rng);
      for (int r = 0; r <= 2 * p; ++r) {
        const double v = piecewise_integral(
            [&](double y) { return k(y) * std::pow(x0 - y, r); }, -w, w);
        CHECK(std::abs(v - std::pow(x0, r)) < 1e-11);
      }
    }
  }
}

TEST_CASE("filter reproduces polynomials of degree 2p on interior windows") {
  for (int p = 1; p <= 4; ++p) {
    CAPTURE(p);
    // a wide non-periodic window; evaluation points stay far from its ends
    dg::Mesh<double> m(0.0, 40.0, 40);
    for (int r = 0; r <= 2 * p; ++r) {
      auto mono = [r](double x) { return std::pow((x - 20) / 4, r); };
      auto sol = dg::l2_project<double>(mono, m, p);
      for (double x : {17.3, 19.0, 20.5, 22.71})
        CHECK(std::abs(postprocess_point(sol, x) - mono(x)) < 1e-10);
    }
  }
}

TEST_CASE("filter of constants and mass neutrality") {
  dg::Mesh<double> m(0.0, 1.0, 12);
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> d(-1, 1);
  for (int p = 1; p <= 4; ++p) {
    auto c = dg::l2_project<double>([](double) { return -1.25; }, m, p);
    CHECK(postprocess_point(c, 0.123) == doctest::Approx(-1.25).epsilon(1e-13));
    CHECK(postprocess_errors(c, [](double) { return -1.25; }).l2 < 1e-12);

    dg::DGSolution<double> r(m, p);
    for (int j = 0; j < m.size(); ++j)
      for (int k = 0; k <= p; ++k) r.coeffs()(j, k) = d(rng);
    CHECK(std::abs(filtered_mass(r) - dg::total_mass(r)) < 1e-11);
  }
}

TEST_CASE("stencil weights agree with pointwise convolution") {
  dg::Mesh<double> m(0.0, 1.0, 16);
  auto sol = dg::l2_project<double>([](double x) { return std::exp(std::sin(2 * M_PI * x)); }, m, 2);
  SIACKernel<double> k(2);
  const double h = m.dx();
  for (double x : {0.01, 0.3, 0.77}) {
    // direct integral of K_h(x - xi) u_h(xi), split at kernel breakpoints and
    // mesh interfaces
    std::vector<double> cuts;
    for (double b : k.breakpoints()) cuts.push_back(x - b * h);
    for (int j = -8; j <= 24; ++j)
      if (j * h > cuts.back() && j * h < cuts.front()) cuts.push_back(j * h);
    std::sort(cuts.begin(), cuts.end());
    const auto rule = numerics::gauss_legendre_rule<double>(10);
    double v = 0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
      v += rule.integrate(
          [&](double xi) {
            const double mid = (cuts[i] + cuts[i + 1]) / 2;
            const double y = xi - std::floor(mid);
            return k((x - xi) / h) / h * sol.evaluate(y);
          },
          cuts[i], cuts[i + 1]);
    CHECK(postprocess_point(sol, x) == doctest::Approx(v).epsilon(1e-12));
  }
}

TEST_CASE("filtered errors on the advection problem") {
  using namespace dgtime::harness;
  auto pr = make_problem<double>(ProblemKind::Linear);
  auto run = [&](int p, int n, IntegratorSpec spec) {
    dg::Mesh<double> m(pr.a, pr.b, n);
    auto sol0 = dg::l2_project<double>([&](double x) { return pr.initial(x); }, m, p);
    auto sol = integrate(sol0, pr.final_time, 0.1, spec, pr.flux);
    auto exact = [&](double x) { return pr.exact(x, pr.final_time); };
    return std::pair{dg::l2_error(sol, exact), postprocess_errors(sol, exact, false).l2};
  };
  // RK3, p = 1, N = 160
  CHECK(run(1, 160, IntegratorSpec::rk3()).second == doctest::Approx(3.76e-6).epsilon(0.05));

  for (int p = 1; p <= 2; ++p) {
    CAPTURE(p);
    double prev = 0;
    for (int n : {20, 40, 80}) {
      auto [dg_err, pp] = run(p, n, IntegratorSpec::sdg());
      if (p >= 2 && n >= 40) CHECK(pp <= dg_err);
      if (prev > 0) CHECK(std::log2(prev / pp) >= 2 * p + 0.5);
      prev = pp;
    }
  }
}

TEST_CASE("pointwise samples") {
  dg::Mesh<double> m(0.0, 1.0, 8);
  auto f = [](double x) { return std::sin(2 * M_PI * x); };
  auto sol = dg::l2_project<double>(f, m, 2);
  auto e = postprocess_errors(sol, f);
  CHECK(e.samples.size() == std::size_t(8 * 4));
  for (std::size_t i = 1; i < e.samples.size(); ++i) CHECK(e.samples[i].x > e.samples[i - 1].x);
  std::ostringstream os;
  write_pointwise_csv(os, e.samples);
  CHECK(os.str().rfind("x,dg_error,filtered_error\n", 0) == 0);
  CHECK(postprocess_errors(sol, f, false).samples.empty());
}
