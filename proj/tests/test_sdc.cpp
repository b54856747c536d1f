#include <doctest.h>

#include <cmath>

#include "dgtime/dg/solution.hpp"
#include "dgtime/harness/integrate.hpp"
#include "dgtime/harness/problems.hpp"
#include "dgtime/numerics/lagrange.hpp"
#include "dgtime/numerics/quadrature.hpp"
#include "dgtime/time/sdc.hpp"
#include "dgtime/time/sdg.hpp"

using namespace dgtime;
using namespace dgtime::time;

namespace {

const auto decay = [](const auto &, const auto &u) { return -u; };

double sdc_order(const SDCTableau<Extended> &tab, int sweeps, int coarse = 1024) {
  auto err = [&](int steps) {
    Extended u = 1;
    const Extended dt = Extended(1) / steps;
    for (int n = 0; n < steps; ++n) u = sdc_step(u, Extended(n) * dt, dt, sweeps, decay, tab);
    return Extended(abs(u - exp(Extended(-1))));
  };
  return to_double(Extended(log2(err(coarse) / err(2 * coarse))));
}

}  // namespace

TEST_CASE("SDC integration matrix") {
  for (int p = 1; p <= 5; ++p) {
    CAPTURE(p);
    auto tab = build_sdc_tableau<double>(p);
    auto radau = numerics::gauss_radau_right_rule<double>(p + 1);
    CHECK(tab.nodes == radau.nodes);
    CHECK(std::abs(tab.S.row(0).sum() - (tab.nodes[0] + 1)) < 1e-12);
    for (int m = 0; m < p; ++m) {
      CHECK(std::abs(tab.S.row(m + 1).sum() - tab.gaps[m]) < 1e-12);
      CHECK(tab.gaps[m] == doctest::Approx(tab.nodes[m + 1] - tab.nodes[m]));
    }
    // rows cover [-1, 1], so column sums are the quadrature weights
    for (int j = 0; j <= p; ++j) CHECK(std::abs(tab.S.col(j).sum() - radau.weights[j]) < 1e-12);
  }
}

TEST_CASE("SDC p=1 entries against a brute-force oracle") {
  auto tab = build_sdc_tableau<double>(1);
  numerics::LagrangeBasis<double> basis(tab.nodes);
  auto midpoint = [&](int j, double lo, double hi) {
    const int n = 20000;
    double s = 0;
    for (int k = 0; k < n; ++k) s += basis.value(j, lo + (k + 0.5) * (hi - lo) / n) * (hi - lo) / n;
    return s;
  };
  for (int j = 0; j <= 1; ++j) {
    CHECK(tab.S(0, j) == doctest::Approx(midpoint(j, -1, -1.0 / 3)).epsilon(1e-8));
    CHECK(tab.S(1, j) == doctest::Approx(midpoint(j, -1.0 / 3, 1)).epsilon(1e-8));
  }
}

TEST_CASE("SDC quadrature is exact on degree-p polynomials") {
  for (int p = 1; p <= 5; ++p) {
    auto tab = build_sdc_tableau<double>(p);
    auto poly = [p](double t) { return std::pow(t, p) - 0.5 * t + 0.25; };
    auto antider = [p](double t) { return std::pow(t, p + 1) / (p + 1) - 0.25 * t * t + 0.25 * t; };
    Vector<double> samples(p + 1);
    for (int j = 0; j <= p; ++j) samples(j) = poly(tab.nodes[j]);
    const Vector<double> seg = tab.S * samples;
    CHECK(std::abs(seg(0) - (antider(tab.nodes[0]) - antider(-1))) < 1e-12);
    for (int m = 0; m < p; ++m)
      CHECK(std::abs(seg(m + 1) - (antider(tab.nodes[m + 1]) - antider(tab.nodes[m]))) < 1e-12);
  }
}

TEST_CASE("SDC step basics") {
  auto zero = [](double, double) { return 0.0; };
  for (auto v : {SDCVariant::Literal, SDCVariant::Corrected}) {
    auto tab = build_sdc_tableau<double>(2, v);
    CHECK(sdc_step(1.25, 0.0, 0.2, 4, zero, tab) == 1.25);
  }
  CHECK_THROWS_AS(build_sdc_tableau<double>(0), std::invalid_argument);
  CHECK_THROWS_AS(sdc_step(1.0, 0.0, -0.1, 2, decay, build_sdc_tableau<double>(1)), std::invalid_argument);
}

TEST_CASE("SDC order ladder") {
  auto tab = build_sdc_tableau<Extended>(2);
  CHECK(sdc_order(tab, 4) == doctest::Approx(5).epsilon(0.3 / 5));
  for (int p = 1; p <= 3; ++p) {
    auto t = build_sdc_tableau<Extended>(p);
    for (int k = 0; k <= 2 * p + 1; ++k) {
      CAPTURE(p);
      CAPTURE(k);
      const int expected = std::min(2 * p + 1, k + 1);
      CHECK(sdc_order(t, k) == doctest::Approx(expected).epsilon(0.3 / expected));
    }
  }
}

TEST_CASE("literal SDC first node is inconsistent") {
  // keeping u_{n,0} = u_n moves the fixed point, so refinement does not help
  auto tab = build_sdc_tableau<Extended>(2, SDCVariant::Literal);
  CHECK(std::abs(sdc_order(tab, 4, 64)) < 0.3);
}

TEST_CASE("SDC and SDG cost the same") {
  for (int p = 1; p <= 4; ++p) {
    auto sdg = build_sdg_tableau<double>(p);
    auto sdc = build_sdc_tableau<double>(p);
    int count_g = 0, count_c = 0;
    auto rg = [&](double, double u) { ++count_g; return -u; };
    auto rc = [&](double, double u) { ++count_c; return -u; };
    sdg_step(1.0, 0.0, 0.1, 2 * p, rg, sdg);
    sdc_step(1.0, 0.0, 0.1, 2 * p, rc, sdc);
    CHECK(count_g == count_c);
    CHECK(count_g == (p + 1) * (2 * p + 1));
    CHECK(sdg.scheme().evaluations_per_step(2 * p) == std::size_t(count_g));
  }
}

TEST_CASE("SDC and SDG agree on the advection problem") {
  using namespace dgtime::harness;
  auto pr = make_problem<double>(ProblemKind::Linear);
  for (int p = 1; p <= 3; ++p) {
    CAPTURE(p);
    dg::Mesh<double> m(pr.a, pr.b, 20);
    auto sol0 = dg::l2_project<double>([&](double x) { return pr.initial(x); }, m, p);
    auto g = integrate(sol0, pr.final_time, 0.1, IntegratorSpec::sdg(), pr.flux);
    auto c = integrate(sol0, pr.final_time, 0.1, IntegratorSpec::sdc(), pr.flux);
    auto exact = [&](double x) { return pr.exact(x, pr.final_time); };
    const double diff = dg::coefficient_norm<double>(g.coeffs() - c.coeffs(), m.dx());
    CHECK(diff < 0.1 * dg::l2_error(g, exact));
  }
}
