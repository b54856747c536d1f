#include <charconv>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dgtime/dg/io.hpp"
#include "dgtime/harness/study.hpp"

namespace dgtime::harness {

namespace {

std::string trim(const std::string &s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

int parse_int(const std::string &key, const std::string &v) {
  int out = 0;
  auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (res.ec != std::errc() || res.ptr != v.data() + v.size())
    throw std::invalid_argument(key + ": not an integer: '" + v + "'");
  return out;
}

double parse_double(const std::string &key, const std::string &v) {
  try {
    return dg::parse_real<double>(v);
  } catch (const std::invalid_argument &) {
    throw std::invalid_argument(key + ": not a number: '" + v + "'");
  }
}

bool parse_bool(const std::string &key, const std::string &v) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw std::invalid_argument(key + ": not a boolean: '" + v + "'");
}

std::vector<int> parse_int_list(const std::string &key, const std::string &v) {
  std::vector<int> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_int(key, trim(item)));
  if (out.empty()) throw std::invalid_argument(key + ": empty list");
  return out;
}

}  // namespace

void apply_config_entry(RunConfig &cfg, const std::string &key, const std::string &value) {
  const std::string v = trim(value);
  if (key == "problem") cfg.problem = parse_problem(v);
  else if (key == "p" || key == "degree" || key == "degrees") cfg.degrees = parse_int_list(key, v);
  else if (key == "N" || key == "elements") cfg.elements = parse_int_list(key, v);
  else if (key == "cfl") cfg.cfl = parse_double(key, v);
  else if (key == "T" || key == "final_time") cfg.final_time = parse_double(key, v);
  else if (key == "integrator") cfg.integrator.kind = parse_integrator(v);
  else if (key == "sweeps" || key == "K") cfg.integrator.sweeps = parse_int(key, v);
  else if (key == "variant") {
    if (v == "literal") cfg.integrator.variant = time::SDCVariant::Literal;
    else if (v == "corrected") cfg.integrator.variant = time::SDCVariant::Corrected;
    else throw std::invalid_argument("variant: expected literal or corrected, got '" + v + "'");
  } else if (key == "tolerance" || key == "eps") cfg.integrator.tolerance = parse_double(key, v);
  else if (key == "max_sweeps" || key == "Kmax") cfg.integrator.max_sweeps = parse_int(key, v);
  else if (key == "precision") {
    if (v == "standard" || v == "double") cfg.precision = Precision::Standard;
    else if (v == "extended" || v == "quad") cfg.precision = Precision::Extended;
    else throw std::invalid_argument("precision: expected standard or extended, got '" + v + "'");
  } else if (key == "timing") cfg.record_timing = parse_bool(key, v);
  else if (key == "propagator") cfg.use_propagator = parse_bool(key, v);
  else if (key == "output") cfg.output = v;
  else if (key == "pointwise") cfg.pointwise_prefix = v;
  else throw std::invalid_argument("unknown config key '" + key + "'");
}

RunConfig parse_config(std::istream &in, RunConfig base) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key=value");
    try {
      apply_config_entry(base, trim(line.substr(0, eq)), line.substr(eq + 1));
    } catch (const std::invalid_argument &e) {
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return base;
}

double effective_cfl(const RunConfig &cfg) {
  return cfg.cfl > 0 ? cfg.cfl : to_double(make_problem<double>(cfg.problem).default_cfl);
}

double effective_final_time(const RunConfig &cfg) {
  return cfg.final_time > 0 ? cfg.final_time : to_double(make_problem<double>(cfg.problem).final_time);
}

void validate(const RunConfig &cfg) {
  if (cfg.cfl < 0) throw std::invalid_argument("cfl must be > 0");
  if (cfg.final_time < 0) throw std::invalid_argument("T must be > 0");
  if (cfg.degrees.empty()) throw std::invalid_argument("no degrees given");
  for (int p : cfg.degrees)
    if (p < 1) throw std::invalid_argument("degree must be >= 1");
  if (cfg.elements.empty()) throw std::invalid_argument("no element counts given");
  for (int n : cfg.elements)
    if (n < 4) throw std::invalid_argument("N must be >= 4");
  if (cfg.problem == ProblemKind::Burgers && effective_final_time(cfg) >= 1)
    throw std::invalid_argument("Burgers final time must be < 1 (shock forms at t = 1)");
  if (cfg.use_propagator && cfg.problem != ProblemKind::Linear)
    throw std::invalid_argument("the Fourier propagator supports the linear problem only");
  if (cfg.use_propagator && cfg.integrator.adaptive())
    throw std::invalid_argument("the Fourier propagator does not support adaptive iterations");
}

}  // namespace dgtime::harness
