#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "dgtime/harness/integrate.hpp"
#include "dgtime/harness/problems.hpp"
#include "dgtime/scalar.hpp"

namespace dgtime::harness {

struct RunConfig {
  ProblemKind problem = ProblemKind::Linear;
  std::vector<int> degrees{2};
  std::vector<int> elements{20, 40, 80, 160};
  double cfl = 0;         // <= 0: problem default
  double final_time = 0;  // <= 0: problem default
  IntegratorSpec integrator = IntegratorSpec::sdg();
  Precision precision = Precision::Standard;
  bool record_timing = true;    // false writes 0 seconds for reproducible output
  bool use_propagator = false;  // Fourier-mode evolution, Linear only
  std::string output;           // CSV path, empty for stdout
  std::string pointwise_prefix; // writes <prefix>_p<p>_N<N>.csv when set
};

/// Sets one key=value entry; throws std::invalid_argument on an unknown key
/// or malformed value.
void apply_config_entry(RunConfig &cfg, const std::string &key, const std::string &value);

/// Line-oriented key=value file; '#' starts a comment.
RunConfig parse_config(std::istream &in, RunConfig base = {});

void validate(const RunConfig &cfg);

double effective_cfl(const RunConfig &cfg);
double effective_final_time(const RunConfig &cfg);

enum class RowStatus { Ok, Failed, NeedsExtended };

/// Filtered errors below this are not trusted in binary64.
inline constexpr double kStandardPrecisionFloor = 5e-13;

struct ConvergenceRow {
  int degree = 0;
  int elements = 0;
  double dg_l2 = 0;
  double pp_l2 = 0;
  std::optional<double> dg_order;
  std::optional<double> pp_order;
  double seconds = 0;
  std::size_t rhs_evaluations = 0;
  long steps = 0;
  long total_sweeps = 0;
  RowStatus status = RowStatus::Ok;
  std::string message;
};

struct ConvergenceReport {
  std::vector<ConvergenceRow> rows;
  bool any_failed() const;
  const ConvergenceRow *find(int degree, int elements) const;
};

ConvergenceReport run_convergence_study(const RunConfig &cfg);

inline constexpr const char *kConvergenceHeader = "degree,N,dg_l2,dg_order,pp_l2,pp_order,seconds,rhs_evals";
void write_csv(std::ostream &os, const ConvergenceReport &report);

struct CflSweepRow {
  double cfl = 0;
  double dg_l2 = 0;
  double pp_l2 = 0;
  long steps = 0;
  std::size_t rhs_evaluations = 0;
};

std::vector<CflSweepRow> cfl_sweep(ProblemKind problem, int degree, int elements, const IntegratorSpec &spec,
                                   const std::vector<double> &cfls, Precision precision,
                                   bool use_propagator = false);

void write_cfl_csv(std::ostream &os, const std::vector<CflSweepRow> &rows);

/// Largest cfl from which every smaller cfl's error stays within
/// (1 + relative) of the error at the smallest cfl.
double plateau_onset(std::vector<std::pair<double, double>> cfl_error, double relative = 0.1);

struct TimingOptions {
  std::vector<int> degrees{1, 2, 3, 4};
  int elements = 160;
  IntegratorSpec corrector = IntegratorSpec::sdg();
  double corrector_cfl = 0.1;
  double target_slack = 0.1;   // RK3 must reach (1 + slack) times the corrector's filtered error
  double max_rk3_cfl = 0.1;
  double budget_seconds = 60;  // per run; longer runs are timed on a prefix and extrapolated
  Precision precision = Precision::Extended;
};

struct TimingRow {
  int degree = 0;
  double target = 0;
  double corrector_pp = 0;
  long corrector_steps = 0;
  std::size_t corrector_evals = 0;
  double corrector_seconds = 0;
  bool corrector_estimated = false;
  double rk3_cfl = 0;
  double rk3_pp = 0;
  long rk3_steps = 0;
  std::size_t rk3_evals = 0;
  double rk3_seconds = 0;
  bool rk3_estimated = false;
  double eval_ratio = 0;
  double time_ratio = 0;
};

/// Cost of RK3 versus a correction scheme at equal filtered accuracy on the
/// linear advection problem.
std::vector<TimingRow> timing_comparison(const TimingOptions &opts);

void write_timing_csv(std::ostream &os, const std::vector<TimingRow> &rows);

}  // namespace dgtime::harness
