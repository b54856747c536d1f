#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>

#include "dgtime/harness/integrate.hpp"
#include "dgtime/harness/problems.hpp"

namespace dgtime::harness {

namespace {
std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return char(std::tolower(c)); });
  std::replace(s.begin(), s.end(), '_', '-');
  return s;
}
}  // namespace

std::string problem_name(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::Linear: return "linear";
    case ProblemKind::VariableCoefficient: return "variable";
    case ProblemKind::Burgers: return "burgers";
  }
  return "?";
}

ProblemKind parse_problem(const std::string &name) {
  const auto s = lower(name);
  if (s == "linear") return ProblemKind::Linear;
  if (s == "variable" || s == "variable-coefficient") return ProblemKind::VariableCoefficient;
  if (s == "burgers") return ProblemKind::Burgers;
  throw std::invalid_argument("unknown problem '" + name + "'");
}

std::string integrator_name(IntegratorKind kind) {
  switch (kind) {
    case IntegratorKind::RK3: return "rk3";
    case IntegratorKind::RK4: return "rk4";
    case IntegratorKind::SDG: return "sdg";
    case IntegratorKind::SDC: return "sdc";
    case IntegratorKind::AdaptiveSDG: return "adaptive-sdg";
    case IntegratorKind::AdaptiveSDC: return "adaptive-sdc";
  }
  return "?";
}

IntegratorKind parse_integrator(const std::string &name) {
  const auto s = lower(name);
  if (s == "rk3") return IntegratorKind::RK3;
  if (s == "rk4") return IntegratorKind::RK4;
  if (s == "sdg") return IntegratorKind::SDG;
  if (s == "sdc") return IntegratorKind::SDC;
  if (s == "adaptive-sdg") return IntegratorKind::AdaptiveSDG;
  if (s == "adaptive-sdc") return IntegratorKind::AdaptiveSDC;
  throw std::invalid_argument("unknown integrator '" + name + "'");
}

}  // namespace dgtime::harness
