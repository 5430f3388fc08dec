#include "hypint/format.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

#include "hypint/rational.hpp"

namespace hypint {

std::string format_real(double x) {
  Rational r;
  if (Rational::approximate(x, r, 1000, 1e-14) && r.to_double() == x) return r.str();
  // Shortest text that round-trips.
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string format_complex(Complex z) {
  if (z.imag() == 0.0) return format_real(z.real());
  std::string im = format_real(std::abs(z.imag()));
  im = (im == "1") ? "i" : im + "i";
  if (z.real() == 0.0) return (z.imag() < 0 ? "-" : "") + im;
  return format_real(z.real()) + (z.imag() < 0 ? "-" : "+") + im;
}

std::string format_jet(const Jet& j) {
  std::string out;
  for (int k = 0; k <= j.order(); ++k) {
    const Complex c = j[k];
    if (c == Complex(0.0) && !(k == 0 && j.is_scalar())) continue;
    std::string mono = k == 0 ? "" : (k == 1 ? "eps" : "eps^" + std::to_string(k));
    std::string coef;
    bool negative = false;
    if (c.imag() == 0.0) {
      negative = c.real() < 0;
      const std::string mag = format_real(std::abs(c.real()));
      coef = (k > 0 && mag == "1") ? "" : mag;
    } else {
      coef = "(" + format_complex(c) + ")";
    }
    std::string term = coef.empty() ? mono : (mono.empty() ? coef : coef + "*" + mono);
    if (out.empty()) {
      out = (negative ? "-" : "") + term;
    } else {
      out += (negative ? "-" : "+") + term;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace hypint
