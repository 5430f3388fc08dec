#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hypint/pfq.hpp"

namespace hypint {

// coefficient · x^shift · [ε^extract] pFq(a; c; γx^β).
struct RepTerm {
  Complex coefficient = 1.0;
  Rational shift = 0;
  int extract = 0;
  PFQSpec spec;

  Complex eval(Complex x, double tol = kSeriesTol) const;
  // "-3/2*[eps^2] x*2F1(1/2-eps,1/2+eps;3/2;x^2)".
  std::string str(const std::string& var = "x") const;
};

// A function (or, when `constant`, a number read off at x = 1) written as a
// sum of extracted hypergeometric terms.
struct Representation {
  std::string name;
  std::vector<RepTerm> terms;
  bool constant = false;
  // Independent elementary evaluation; empty when none is known.
  std::function<Complex(Complex)> reference;
  // Closed form of the constant, when there is one.
  std::string closed_form;

  Complex eval(Complex x = 1.0, double tol = kSeriesTol) const;
  std::string str(const std::string& var = "x") const;
};

// Spec whose parameters are lists of scalars plus ε-slopes: value_i + slope_i·ε.
PFQSpec jet_spec(const std::vector<std::pair<Complex, Complex>>& upper,
                 const std::vector<std::pair<Complex, Complex>>& lower, int order, Complex scale = 1.0,
                 Rational power = 1);

}  // namespace hypint
