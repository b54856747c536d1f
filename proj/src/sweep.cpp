#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "dgtime/dg/io.hpp"
#include "dgtime/harness/propagator.hpp"
#include "dgtime/harness/study.hpp"
#include "dgtime/siac/filter.hpp"

namespace dgtime::harness {

namespace {

template <class Real>
std::vector<CflSweepRow> sweep(ProblemKind kind, int p, int n, const IntegratorSpec &spec,
                               const std::vector<double> &cfls, bool use_propagator) {
  const auto pr = make_problem<Real>(kind);
  const dg::Mesh<Real> mesh(pr.a, pr.b, n);
  const auto sol0 = dg::l2_project<Real>([&](const Real &x) { return pr.initial(x); }, mesh, p);
  const Real T = pr.final_time;
  auto exact = [&](const Real &x) { return pr.exact(x, T); };
  std::vector<CflSweepRow> rows;
  for (double c : cfls) {
    if (!(c > 0)) throw std::invalid_argument("cfl_sweep: cfl must be > 0");
    IntegrationStats stats;
    const auto sol = use_propagator
                         ? FourierPropagator<Real>(mesh, p, pr.flux, spec).evolve(sol0, T, Real(c), &stats)
                         : integrate(sol0, T, Real(c), spec, pr.flux, pr.speed_scaled_dt(), &stats);
    rows.push_back({c, reported_error(dg::l2_error(sol, exact), mesh),
                    reported_error(siac::postprocess_errors(sol, exact, false).l2, mesh),
                    stats.steps, stats.rhs_evaluations});
  }
  return rows;
}

}  // namespace

std::vector<CflSweepRow> cfl_sweep(ProblemKind problem, int degree, int elements, const IntegratorSpec &spec,
                                   const std::vector<double> &cfls, Precision precision, bool use_propagator) {
  if (use_propagator && problem != ProblemKind::Linear)
    throw std::invalid_argument("cfl_sweep: the Fourier propagator supports the linear problem only");
  return precision == Precision::Extended ? sweep<Extended>(problem, degree, elements, spec, cfls, use_propagator)
                                          : sweep<double>(problem, degree, elements, spec, cfls, use_propagator);
}

void write_cfl_csv(std::ostream &os, const std::vector<CflSweepRow> &rows) {
  os << "cfl,dg_l2,pp_l2,steps,rhs_evals\n";
  for (const auto &r : rows)
    os << dg::format_real(r.cfl) << ',' << dg::format_real(r.dg_l2) << ',' << dg::format_real(r.pp_l2) << ','
       << r.steps << ',' << r.rhs_evaluations << '\n';
}

double plateau_onset(std::vector<std::pair<double, double>> cfl_error, double relative) {
  if (cfl_error.empty()) throw std::invalid_argument("plateau_onset: no data");
  std::sort(cfl_error.begin(), cfl_error.end());
  const double floor = cfl_error.front().second * (1 + relative);
  double onset = cfl_error.front().first;
  for (const auto &[c, e] : cfl_error) {
    if (e > floor) break;
    onset = c;
  }
  return onset;
}

}  // namespace dgtime::harness
