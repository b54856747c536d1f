#pragma once

#include <charconv>
#include <iomanip>
#include <limits>
#include <istream>
#include <locale>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <system_error>

#include "dgtime/dg/solution.hpp"
#include "dgtime/scalar.hpp"

namespace dgtime::dg {

/// Shortest decimal string that parses back to exactly the same value.
inline std::string format_real(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

inline std::string format_real(const Extended &x) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::scientific << std::setprecision(std::numeric_limits<Extended>::max_digits10) << x;
  return os.str();
}

template <class Real>
Real parse_real(const std::string &s);

template <>
inline double parse_real<double>(const std::string &s) {
  double v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw std::invalid_argument("parse_real: not a number: '" + s + "'");
  return v;
}

template <>
inline Extended parse_real<Extended>(const std::string &s) {
  try {
    return Extended(s);
  } catch (const std::exception &) {
    throw std::invalid_argument("parse_real: not a number: '" + s + "'");
  }
}

/// Plain-text dump: a header line "a b N p t" followed by N rows of p+1
/// modal coefficients.
template <class Real>
void write_solution(std::ostream &os, const DGSolution<Real> &sol) {
  const auto &m = sol.mesh();
  os << format_real(m.a()) << ' ' << format_real(m.b()) << ' ' << m.size() << ' ' << sol.degree() << ' '
     << format_real(sol.time()) << '\n';
  for (int j = 0; j < m.size(); ++j) {
    for (int k = 0; k <= sol.degree(); ++k) {
      if (k) os << ' ';
      os << format_real(sol.coeffs()(j, k));
    }
    os << '\n';
  }
}

template <class Real>
DGSolution<Real> read_solution(std::istream &is) {
  std::string a, b, t;
  int n = 0, p = 0;
  if (!(is >> a >> b >> n >> p >> t)) throw std::runtime_error("read_solution: malformed header");
  DGSolution<Real> sol(Mesh<Real>(parse_real<Real>(a), parse_real<Real>(b), n), p, parse_real<Real>(t));
  std::string tok;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k <= p; ++k) {
      if (!(is >> tok)) throw std::runtime_error("read_solution: truncated coefficient block");
      sol.coeffs()(j, k) = parse_real<Real>(tok);
    }
  return sol;
}

}  // namespace dgtime::dg
