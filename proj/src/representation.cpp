#include "hypint/representation.hpp"

#include <cmath>

#include "hypint/format.hpp"

namespace hypint {

namespace {

std::string coefficient_text(Complex c) {
  if (c == Complex(1.0)) return "";
  if (c == Complex(-1.0)) return "-";
  if (c.imag() == 0.0) return format_real(c.real()) + "*";
  return "(" + format_complex(c) + ")*";
}

}  // namespace

Complex RepTerm::eval(Complex x, double tol) const {
  const Jet v = hypint::eval(spec, x, tol);
  return coefficient * rational_power(x, shift) * hypint::extract(extract, v);
}

std::string RepTerm::str(const std::string& var) const {
  std::string out = coefficient_text(coefficient);
  if (extract > 0) out += extract == 1 ? "[eps] " : "[eps^" + std::to_string(extract) + "] ";
  if (shift.num() != 0) {
    if (shift == Rational(1)) out += var + "*";
    else if (shift.is_integer() && shift.num() > 0) out += var + "^" + shift.str() + "*";
    else out += var + "^(" + shift.str() + ")*";
  }
  return out + spec.str(var);
}

Complex Representation::eval(Complex x, double tol) const {
  Complex sum = 0.0;
  for (const RepTerm& t : terms) sum += t.eval(constant ? Complex(1.0) : x, tol);
  return sum;
}

std::string Representation::str(const std::string& var) const {
  std::string out;
  for (const RepTerm& t : terms) {
    std::string s = t.str(constant ? "1" : var);
    if (!out.empty()) out += s.front() == '-' ? " " : " + ";
    out += s;
  }
  return out;
}

PFQSpec jet_spec(const std::vector<std::pair<Complex, Complex>>& upper,
                 const std::vector<std::pair<Complex, Complex>>& lower, int order, Complex scale, Rational power) {
  std::vector<Jet> u, l;
  for (const auto& [v, s] : upper) u.push_back(Jet::variable(v, s, order));
  for (const auto& [v, s] : lower) l.push_back(Jet::variable(v, s, order));
  if (u.empty() && l.empty()) return PFQSpec::scalar({}, {}, scale, power, order);
  return PFQSpec(std::move(u), std::move(l), scale, power);
}

}  // namespace hypint
