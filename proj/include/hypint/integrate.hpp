#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hypint/hyperize.hpp"
#include "hypint/pfq.hpp"
#include "hypint/representation.hpp"

namespace hypint {

inline constexpr double kIntegralTol = 1e-10;

// f(γx^β) for a coefficient stream f.
struct StreamBody {
  CoeffStream f;
  Complex scale = 1.0;
  Rational power = 1;
};

using Body = std::variant<PFQSpec, StreamBody>;

// coefficient · x^α · [ε^extract] f(γx^β).
struct IntegrandSpec {
  Rational alpha;
  Body body;
  Complex coefficient = 1.0;
  int extract = 0;
  std::string label;
  // Independent real evaluation used by the quadrature oracle; never routed
  // through the series engine. Empty when none is known.
  std::function<double(double)> elementary;

  Rational beta() const;
  Complex gamma() const;
  int order() const;
  Complex eval(Complex x, double tol = kSeriesTol) const;
};

IntegrandSpec integrand(const RepTerm& term, std::string label = "");

// coefficient · x^{α+1}/(α+1) · [ε^extract] g(γx^β), with g the body
// augmented by ((α+1)/β; 1+(α+1)/β).
struct AntiderivativeForm {
  IntegrandSpec integrand;
  Rational prefactor_exponent;
  Rational prefactor_coeff;
  Body body;
  // The augmented spec after dropping equal upper/lower pairs (PFQSpec bodies only).
  std::optional<PFQSpec> simplified;

  Jet eval_body(Complex x, double tol = kSeriesTol) const;
  Complex eval(Complex x, double tol = kSeriesTol) const;
  std::string str(const std::string& var = "x") const;
};

// Throws DomainError for α = −1 (use antiderivative_log) or when −(α+1)/β is
// a non-negative integer.
AntiderivativeForm antiderivative(const IntegrandSpec& spec);

// Antiderivative of f(x^α)/x as f(0)·ln x + (f(x^α) − f(0))/α − (x^α/α)[ε] f′([1+ε; 2+ε] x^α).
struct LogAntiderivative {
  Rational alpha;
  Complex f0;
  CoeffStream f;
  CoeffStream hypized_derivative;  // f′([1+ε; 2+ε] ·) at jet order 1

  Complex log_term(Complex x) const;
  Complex difference_term(Complex x, double tol = kSeriesTol) const;
  Complex extraction_term(Complex x, double tol = kSeriesTol) const;
  Complex eval(Complex x, double tol = kSeriesTol) const;
};
// Throws DomainError for α = 0.
LogAntiderivative antiderivative_log(Rational alpha, const CoeffStream& f);

struct IntegralResult {
  Jet value;  // value[0] is the integral; higher coefficients are ε-derivatives
  std::vector<std::string> method;
  std::optional<double> oracle_value;
  std::optional<double> discrepancy;
};

struct IntegrateOptions {
  double tol = kIntegralTol;
  bool run_oracle = false;
};

// F(1) − F(0⁺). Requires α + 1 + βj > 0 for the first j whose [ε^extract]
// coefficient is non-zero, so that F(0⁺) = 0.
IntegralResult definite_0_to_1(const IntegrandSpec& spec, const IntegrateOptions& opts = {});
// F(∞) − F(0⁺) = coefficient · [ε^extract] C |γ|^{−(α+1)/β} / (α+1), with C the
// limit coefficient of the augmented body. Requires γ < 0, β > 0 and the added
// upper parameter strictly minimal.
IntegralResult definite_0_to_inf(const IntegrandSpec& spec, const IntegrateOptions& opts = {});

// max over points of |F′(x) by central difference (h = 1e−5) − integrand(x)|.
double verify_ftc(const AntiderivativeForm& form, const std::vector<double>& points);

// Named integrands with elementary oracle evaluations.
struct CatalogIntegrand {
  IntegrandSpec spec;
  std::string closed_form;  // empty when none
  bool to_infinity = false;
  std::vector<double> ftc_points;
};
const std::vector<CatalogIntegrand>& integrand_catalog();

}  // namespace hypint
