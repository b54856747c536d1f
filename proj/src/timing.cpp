#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "dgtime/dg/io.hpp"
#include "dgtime/harness/propagator.hpp"
#include "dgtime/harness/study.hpp"
#include "dgtime/siac/filter.hpp"

namespace dgtime::harness {

namespace {

struct Timed {
  double seconds = 0;
  bool estimated = false;
};

/// Wall clock of a direct run. Runs longer than the budget are timed over a
/// short prefix and scaled by the step count.
template <class Real>
Timed wall_clock(const dg::DGSolution<Real> &sol0, const Problem<Real> &pr, const IntegratorSpec &spec,
                 const Real &cfl, long steps, double budget) {
  using clock = std::chrono::steady_clock;
  const Real nominal = cfl * sol0.mesh().dx();
  const long probe = std::min<long>(steps, 4);
  auto t0 = clock::now();
  integrate(sol0, Real(nominal * Real(probe)), cfl, spec, pr.flux);
  const double per_step = std::chrono::duration<double>(clock::now() - t0).count() / double(probe);
  if (per_step * double(steps) > budget) return {per_step * double(steps), true};
  t0 = clock::now();
  integrate(sol0, pr.final_time, cfl, spec, pr.flux);
  return {std::chrono::duration<double>(clock::now() - t0).count(), false};
}

template <class Real>
std::vector<TimingRow> compare(const TimingOptions &opts) {
  const auto pr = make_problem<Real>(ProblemKind::Linear);
  const Real T = pr.final_time;
  auto exact = [&](const Real &x) { return pr.exact(x, T); };
  std::vector<TimingRow> rows;
  for (int p : opts.degrees) {
    TimingRow row;
    row.degree = p;
    const dg::Mesh<Real> mesh(pr.a, pr.b, opts.elements);
    const auto sol0 = dg::l2_project<Real>([&](const Real &x) { return pr.initial(x); }, mesh, p);

    IntegrationStats cs;
    const FourierPropagator<Real> corrector(mesh, p, pr.flux, opts.corrector);
    const auto csol = corrector.evolve(sol0, T, Real(opts.corrector_cfl), &cs);
    row.corrector_pp = reported_error(siac::postprocess_errors(csol, exact, false).l2, mesh);
    row.corrector_steps = cs.steps;
    row.corrector_evals = cs.rhs_evaluations;
    row.target = row.corrector_pp * (1 + opts.target_slack);

    const FourierPropagator<Real> rk(mesh, p, pr.flux, IntegratorSpec::rk3());
    auto rk_error = [&](double c, IntegrationStats *st) {
      return reported_error(siac::postprocess_errors(rk.evolve(sol0, T, Real(c), st), exact, false).l2, mesh);
    };
    double hi = opts.max_rk3_cfl;
    double chosen = hi;
    if (!(rk_error(hi, nullptr) <= row.target)) {
      double lo = hi;
      do {
        hi = lo;
        lo /= 10;
        if (lo < 1e-10) throw std::runtime_error("timing_comparison: RK3 cannot reach the target accuracy");
      } while (!(rk_error(lo, nullptr) <= row.target));
      for (int it = 0; it < 40 && hi / lo > 1.0001; ++it) {
        const double mid = std::sqrt(lo * hi);
        (rk_error(mid, nullptr) <= row.target ? lo : hi) = mid;
      }
      chosen = lo;
    }
    IntegrationStats rs;
    row.rk3_cfl = chosen;
    row.rk3_pp = rk_error(chosen, &rs);
    row.rk3_steps = rs.steps;
    row.rk3_evals = rs.rhs_evaluations;

    const auto ct = wall_clock(sol0, pr, opts.corrector, Real(opts.corrector_cfl), cs.steps, opts.budget_seconds);
    const auto rt = wall_clock(sol0, pr, IntegratorSpec::rk3(), Real(chosen), rs.steps, opts.budget_seconds);
    row.corrector_seconds = ct.seconds;
    row.corrector_estimated = ct.estimated;
    row.rk3_seconds = rt.seconds;
    row.rk3_estimated = rt.estimated;
    row.eval_ratio = double(row.rk3_evals) / double(row.corrector_evals);
    row.time_ratio = row.rk3_seconds / row.corrector_seconds;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

std::vector<TimingRow> timing_comparison(const TimingOptions &opts) {
  if (opts.corrector.adaptive() || !opts.corrector.correction())
    throw std::invalid_argument("timing_comparison: corrector must be SDG or SDC with fixed sweeps");
  if (!(opts.corrector_cfl > 0) || !(opts.max_rk3_cfl > 0))
    throw std::invalid_argument("timing_comparison: cfl must be > 0");
  return opts.precision == Precision::Extended ? compare<Extended>(opts) : compare<double>(opts);
}

void write_timing_csv(std::ostream &os, const std::vector<TimingRow> &rows) {
  os << "degree,target,corrector_pp,corrector_steps,corrector_evals,corrector_seconds,corrector_estimated,"
        "rk3_cfl,rk3_pp,rk3_steps,rk3_evals,rk3_seconds,rk3_estimated,eval_ratio,time_ratio\n";
  auto num = [](double v) { return dg::format_real(v); };
  for (const auto &r : rows)
    os << r.degree << ',' << num(r.target) << ',' << num(r.corrector_pp) << ',' << r.corrector_steps << ','
       << r.corrector_evals << ',' << num(r.corrector_seconds) << ',' << (r.corrector_estimated ? 1 : 0) << ','
       << num(r.rk3_cfl) << ',' << num(r.rk3_pp) << ',' << r.rk3_steps << ',' << r.rk3_evals << ','
       << num(r.rk3_seconds) << ',' << (r.rk3_estimated ? 1 : 0) << ',' << num(r.eval_ratio) << ','
       << num(r.time_ratio) << '\n';
}

}  // namespace dgtime::harness
