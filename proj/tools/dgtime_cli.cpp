// Command-line driver: convergence studies, cfl sweeps, cost comparison and
// solution dumps.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dgtime/dg/io.hpp"
#include "dgtime/harness/study.hpp"
#include "dgtime/siac/filter.hpp"

using namespace dgtime;
using namespace dgtime::harness;

namespace {

struct RawOptions {
  std::string config_file;
  std::vector<std::pair<std::string, std::string>> entries;
};

/// Registers one flag per RunConfig field. Values are applied after the
/// config file, so flags override it.
void add_run_flags(CLI::App *app, RawOptions &raw) {
  auto entry = [&raw, app](const std::string &flag, const std::string &key, const std::string &help) {
    app->add_option_function<std::string>(
        flag, [&raw, key](const std::string &v) { raw.entries.emplace_back(key, v); }, help);
  };
  app->add_option("--config", raw.config_file, "key=value config file");
  entry("--problem", "problem", "linear | variable | burgers");
  entry("-p,--degree", "degrees", "polynomial degree(s), comma separated");
  entry("-N,--elements", "elements", "element counts, comma separated");
  entry("--cfl", "cfl", "cfl number (default: per problem)");
  entry("-T,--final-time", "final_time", "final time (default: per problem)");
  entry("--integrator", "integrator", "rk3 | rk4 | sdg | sdc | adaptive-sdg | adaptive-sdc");
  entry("-K,--sweeps", "sweeps", "correction sweeps (default 2p)");
  entry("--variant", "variant", "SDC first-node variant: corrected | literal");
  entry("--tolerance", "tolerance", "adaptive stopping tolerance (default dx^(p+1))");
  entry("--max-sweeps", "max_sweeps", "adaptive sweep cap (default 2p)");
  entry("--precision", "precision", "standard | extended");
  entry("--timing", "timing", "record wall-clock seconds (true | false)");
  entry("--propagator", "propagator", "Fourier-mode evolution for the linear problem (true | false)");
  entry("-o,--output", "output", "CSV output path (default stdout)");
  entry("--pointwise", "pointwise", "prefix for pointwise error CSV files");
}

RunConfig build_config(const RawOptions &raw) {
  RunConfig cfg;
  if (!raw.config_file.empty()) {
    std::ifstream in(raw.config_file);
    if (!in) throw std::runtime_error("cannot open config file " + raw.config_file);
    cfg = parse_config(in, cfg);
  }
  for (const auto &[k, v] : raw.entries) apply_config_entry(cfg, k, v);
  validate(cfg);
  return cfg;
}

template <class Fn>
void with_output(const std::string &path, Fn &&fn) {
  if (path.empty()) {
    fn(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  fn(out);
}

std::vector<double> parse_double_list(const std::string &s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(dg::parse_real<double>(item));
  return out;
}

int run_converge(const RawOptions &raw) {
  const auto cfg = build_config(raw);
  const auto report = run_convergence_study(cfg);
  with_output(cfg.output, [&](std::ostream &os) { write_csv(os, report); });
  for (const auto &r : report.rows)
    if (r.status == RowStatus::Failed)
      std::cerr << "p=" << r.degree << " N=" << r.elements << " failed: " << r.message << '\n';
  return report.any_failed() ? 1 : 0;
}

template <class Real>
void dump_solution(const RunConfig &cfg, std::ostream &os) {
  const auto pr = make_problem<Real>(cfg.problem);
  const dg::Mesh<Real> mesh(pr.a, pr.b, cfg.elements.front());
  const int p = cfg.degrees.front();
  const auto sol0 = dg::l2_project<Real>([&](const Real &x) { return pr.initial(x); }, mesh, p);
  const Real T = Real(effective_final_time(cfg));
  const auto sol = integrate(sol0, T, Real(effective_cfl(cfg)), cfg.integrator, pr.flux, pr.speed_scaled_dt());
  dg::write_solution(os, sol);
  if (!cfg.pointwise_prefix.empty()) {
    auto errors = siac::postprocess_errors(sol, [&](const Real &x) { return pr.exact(x, T); });
    std::ofstream out(cfg.pointwise_prefix + ".csv");
    siac::write_pointwise_csv(out, errors.samples);
  }
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"DG method-of-lines solver with spectral time integrators and SIAC filtering"};
  app.require_subcommand(1);

  RawOptions converge_raw, dump_raw, sweep_raw;
  auto *converge = app.add_subcommand("converge", "L2 errors and orders over a list of meshes");
  add_run_flags(converge, converge_raw);

  auto *dump = app.add_subcommand("dump", "integrate one configuration and write the final coefficients");
  add_run_flags(dump, dump_raw);

  auto *sweep = app.add_subcommand("cfl-sweep", "errors versus cfl number at a fixed mesh");
  add_run_flags(sweep, sweep_raw);
  std::string cfl_list = "0.1,0.05,0.02,0.01,0.005,0.002,0.001";
  sweep->add_option("--cfls", cfl_list, "cfl values, comma separated");

  auto *timing = app.add_subcommand("timing", "RK3 versus a correction scheme at equal filtered accuracy");
  TimingOptions topts;
  std::string timing_degrees = "1,2,3,4", timing_out, timing_integrator = "sdg", timing_precision = "extended";
  timing->add_option("-p,--degree", timing_degrees, "degrees, comma separated");
  timing->add_option("-N,--elements", topts.elements, "element count");
  timing->add_option("--integrator", timing_integrator, "sdg | sdc");
  timing->add_option("--cfl", topts.corrector_cfl, "cfl of the correction scheme");
  timing->add_option("--slack", topts.target_slack, "relative slack on the target accuracy");
  timing->add_option("--max-rk3-cfl", topts.max_rk3_cfl, "largest RK3 cfl tried");
  timing->add_option("--budget", topts.budget_seconds, "wall-clock budget per run in seconds");
  timing->add_option("--precision", timing_precision, "standard | extended");
  timing->add_option("-o,--output", timing_out, "CSV output path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*converge) return run_converge(converge_raw);
    if (*dump) {
      const auto cfg = build_config(dump_raw);
      with_output(cfg.output, [&](std::ostream &os) {
        if (cfg.precision == Precision::Extended)
          dump_solution<Extended>(cfg, os);
        else
          dump_solution<double>(cfg, os);
      });
      return 0;
    }
    if (*sweep) {
      const auto cfg = build_config(sweep_raw);
      const auto rows = cfl_sweep(cfg.problem, cfg.degrees.front(), cfg.elements.front(), cfg.integrator,
                                  parse_double_list(cfl_list), cfg.precision, cfg.use_propagator);
      with_output(cfg.output, [&](std::ostream &os) { write_cfl_csv(os, rows); });
      return 0;
    }
    if (*timing) {
      RunConfig scratch;
      apply_config_entry(scratch, "degrees", timing_degrees);
      apply_config_entry(scratch, "integrator", timing_integrator);
      apply_config_entry(scratch, "precision", timing_precision);
      topts.degrees = scratch.degrees;
      topts.corrector.kind = scratch.integrator.kind;
      topts.precision = scratch.precision;
      const auto rows = timing_comparison(topts);
      with_output(timing_out, [&](std::ostream &os) { write_timing_csv(os, rows); });
      return 0;
    }
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
