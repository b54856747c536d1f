#include <chrono>
#include <cmath>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "dgtime/dg/io.hpp"
#include "dgtime/dg/solution.hpp"
#include "dgtime/harness/propagator.hpp"
#include "dgtime/harness/study.hpp"
#include "dgtime/siac/filter.hpp"

namespace dgtime::harness {

bool ConvergenceReport::any_failed() const {
  for (const auto &r : rows)
    if (r.status == RowStatus::Failed) return true;
  return false;
}

const ConvergenceRow *ConvergenceReport::find(int degree, int elements) const {
  for (const auto &r : rows)
    if (r.degree == degree && r.elements == elements) return &r;
  return nullptr;
}

namespace {

template <class Real>
ConvergenceRow run_row(const RunConfig &cfg, const Problem<Real> &pr, int p, int n) {
  ConvergenceRow row;
  row.degree = p;
  row.elements = n;
  const Real T = Real(effective_final_time(cfg));
  const Real cfl = Real(effective_cfl(cfg));
  const dg::Mesh<Real> mesh(pr.a, pr.b, n);
  const auto sol0 = dg::l2_project<Real>([&](const Real &x) { return pr.initial(x); }, mesh, p);

  IntegrationStats stats;
  const auto start = std::chrono::steady_clock::now();
  dg::DGSolution<Real> sol =
      cfg.use_propagator
          ? FourierPropagator<Real>(mesh, p, pr.flux, cfg.integrator).evolve(sol0, T, cfl, &stats)
          : integrate(sol0, T, cfl, cfg.integrator, pr.flux, pr.speed_scaled_dt(), &stats);
  const auto stop = std::chrono::steady_clock::now();

  auto exact = [&](const Real &x) { return pr.exact(x, T); };
  const bool samples = !cfg.pointwise_prefix.empty();
  const auto filtered = siac::postprocess_errors(sol, exact, samples);
  row.dg_l2 = reported_error(dg::l2_error(sol, exact), mesh);
  row.pp_l2 = reported_error(filtered.l2, mesh);
  row.seconds = cfg.record_timing ? std::chrono::duration<double>(stop - start).count() : 0.0;
  row.rhs_evaluations = stats.rhs_evaluations;
  row.steps = stats.steps;
  row.total_sweeps = stats.total_sweeps;
  if (cfg.precision == Precision::Standard && row.pp_l2 < kStandardPrecisionFloor) row.status = RowStatus::NeedsExtended;

  if (samples) {
    const std::string path = cfg.pointwise_prefix + "_p" + std::to_string(p) + "_N" + std::to_string(n) + ".csv";
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    siac::write_pointwise_csv(out, filtered.samples);
  }
  return row;
}

template <class Real>
ConvergenceReport run_study(const RunConfig &cfg) {
  const auto pr = make_problem<Real>(cfg.problem);
  ConvergenceReport report;
  for (int p : cfg.degrees) {
    const ConvergenceRow *prev = nullptr;
    for (int n : cfg.elements) {
      ConvergenceRow row;
      try {
        row = run_row<Real>(cfg, pr, p, n);
      } catch (const std::exception &e) {
        row = {};
        row.degree = p;
        row.elements = n;
        row.status = RowStatus::Failed;
        row.message = e.what();
      }
      if (prev && prev->status != RowStatus::Failed && row.status != RowStatus::Failed && n != prev->elements) {
        const double ratio = std::log(double(n) / prev->elements);
        row.dg_order = std::log(prev->dg_l2 / row.dg_l2) / ratio;
        if (prev->status == RowStatus::Ok && row.status == RowStatus::Ok)
          row.pp_order = std::log(prev->pp_l2 / row.pp_l2) / ratio;
      }
      report.rows.push_back(std::move(row));
      prev = &report.rows.back();
    }
  }
  return report;
}

}  // namespace

ConvergenceReport run_convergence_study(const RunConfig &cfg) {
  validate(cfg);
  return cfg.precision == Precision::Extended ? run_study<Extended>(cfg) : run_study<double>(cfg);
}

void write_csv(std::ostream &os, const ConvergenceReport &report) {
  os << kConvergenceHeader << '\n';
  auto num = [](double v) { return dg::format_real(v); };
  auto opt = [&](const std::optional<double> &v) { return v ? num(*v) : std::string(); };
  for (const auto &r : report.rows) {
    os << r.degree << ',' << r.elements << ',';
    if (r.status == RowStatus::Failed) {
      os << "failed,,failed,," << num(r.seconds) << ',' << r.rhs_evaluations << '\n';
      continue;
    }
    os << num(r.dg_l2) << ',' << opt(r.dg_order) << ',';
    if (r.status == RowStatus::NeedsExtended)
      os << "needs-extended,";
    else
      os << num(r.pp_l2) << ',';
    os << opt(r.pp_order) << ',' << num(r.seconds) << ',' << r.rhs_evaluations << '\n';
  }
}

}  // namespace dgtime::harness
