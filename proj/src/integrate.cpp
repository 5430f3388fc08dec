#include "hypint/integrate.hpp"

#include <cmath>

#include "hypint/format.hpp"
#include "hypint/numkernel.hpp"
#include "hypint/oracle.hpp"
#include "hypint/transforms.hpp"

namespace hypint {

namespace {

constexpr int kZeroScan = 64;
constexpr double kOracleTol = 1e-12;

// Coefficients j ≥ k of a jet, re-indexed from 0.
Jet shift_down(const Jet& j, int k) {
  Jet out(j.order() - k);
  for (int i = 0; i + k <= j.order(); ++i) out[i] = j[i + k];
  return out;
}

int body_order(const Body& b) {
  return std::visit(
      [](const auto& v) {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, PFQSpec>) return v.order();
        else return v.f.order();
      },
      b);
}

Jet eval_body_at(const Body& b, Complex x, double tol) {
  if (const auto* spec = std::get_if<PFQSpec>(&b)) return eval(*spec, x, tol);
  const auto& s = std::get<StreamBody>(b);
  return s.f.eval(s.scale * rational_power(x, s.power), tol);
}

// γ^j times the j-th coefficient of the body in (x^β)^j.
Jet body_coefficient(const Body& b, int j) {
  if (const auto* spec = std::get_if<PFQSpec>(&b)) return series_coefficient(*spec, j) * std::pow(spec->scale(), j);
  const auto& s = std::get<StreamBody>(b);
  return s.f.coeff(j) * std::pow(s.scale, j);
}

std::string body_str(const Body& b, const std::string& var) {
  if (const auto* spec = std::get_if<PFQSpec>(&b)) return spec->str(var);
  const auto& s = std::get<StreamBody>(b);
  std::string arg = var;
  if (!(s.power == Rational(1))) arg += s.power.is_integer() ? "^" + s.power.str() : "^(" + s.power.str() + ")";
  if (s.scale != Complex(1.0)) arg = format_complex(s.scale) + "*" + arg;
  return s.f.label() + "(" + arg + ")";
}

std::string prefix_str(Complex coefficient, int extract) {
  std::string out;
  if (coefficient != Complex(1.0)) out += "(" + format_complex(coefficient) + ")*";
  if (extract > 0) out += extract == 1 ? "[eps] " : "[eps^" + std::to_string(extract) + "] ";
  return out;
}

void check_vanishes_at_zero(const IntegrandSpec& spec, std::vector<std::string>& trace) {
  const double lead = spec.alpha.to_double() + 1.0;
  const double beta = spec.beta().to_double();
  for (int j = 0; j < kZeroScan; ++j) {
    if (std::abs(body_coefficient(spec.body, j)[spec.extract]) == 0.0) continue;
    if (!(lead + beta * j > 0.0))
      throw DivergenceError("integral diverges at 0: alpha + 1 + beta*j = " + format_real(lead + beta * j) +
                            " <= 0 for the first non-zero term j = " + std::to_string(j));
    trace.push_back("F(0+) = 0: first non-zero term j = " + std::to_string(j) + " has exponent " +
                    format_real(lead + beta * j) + " > 0");
    return;
  }
  trace.push_back("F(0+) = 0: no non-zero term among the first " + std::to_string(kZeroScan));
}

void run_oracle(const IntegrandSpec& spec, bool to_infinity, IntegralResult& r) {
  if (!spec.elementary) {
    r.method.push_back("oracle: skipped (no elementary integrand)");
    return;
  }
  const oracle::RealFn f = spec.elementary;
  const auto q = to_infinity ? oracle::quad_halfline(f, kOracleTol) : oracle::quad_finite(f, 0.0, 1.0, kOracleTol);
  r.oracle_value = q.value;
  r.discrepancy = std::abs(r.value.value() - q.value);
  r.method.push_back("oracle: " + q.method + ", " + std::to_string(q.evaluations) + " evaluations");
}

Rational added_parameter(const IntegrandSpec& spec) {
  const Rational lead = spec.alpha + Rational(1);
  if (lead == Rational(0)) throw DomainError("alpha != -1 (use the logarithmic antiderivative)");
  const Rational q = lead / spec.beta();
  if (q.is_integer() && q.num() <= 0)
    throw DomainError("-(alpha+1)/beta not a non-negative integer (got " + q.str() + ")");
  return q;
}

}  // namespace

Rational IntegrandSpec::beta() const {
  if (const auto* spec = std::get_if<PFQSpec>(&body)) return spec->power();
  return std::get<StreamBody>(body).power;
}

Complex IntegrandSpec::gamma() const {
  if (const auto* spec = std::get_if<PFQSpec>(&body)) return spec->scale();
  return std::get<StreamBody>(body).scale;
}

int IntegrandSpec::order() const { return body_order(body); }

Complex IntegrandSpec::eval(Complex x, double tol) const {
  return coefficient * rational_power(x, alpha) * hypint::extract(extract, eval_body_at(body, x, tol));
}

IntegrandSpec integrand(const RepTerm& term, std::string label) {
  IntegrandSpec s{term.shift, term.spec, term.coefficient, term.extract, std::move(label), {}};
  if (s.label.empty()) s.label = term.str();
  return s;
}

Jet AntiderivativeForm::eval_body(Complex x, double tol) const {
  if (simplified) return hypint::eval(*simplified, x, tol);
  return eval_body_at(body, x, tol);
}

Complex AntiderivativeForm::eval(Complex x, double tol) const {
  return integrand.coefficient * prefactor_coeff.to_double() * rational_power(x, prefactor_exponent) *
         hypint::extract(integrand.extract, eval_body(x, tol));
}

std::string AntiderivativeForm::str(const std::string& var) const {
  std::string out = prefix_str(integrand.coefficient, integrand.extract);
  out += var + "^(" + prefactor_exponent.str() + ")/(" + prefactor_exponent.str() + ")*";
  return out + (simplified ? simplified->str(var) : body_str(body, var));
}

AntiderivativeForm antiderivative(const IntegrandSpec& spec) {
  const Rational q = added_parameter(spec);
  const Rational lead = spec.alpha + Rational(1);
  AntiderivativeForm form{spec, lead, Rational(1) / lead, spec.body, std::nullopt};
  const int K = spec.order();
  const Jet a(q.to_double(), K), c(q.to_double() + 1.0, K);
  if (const auto* p = std::get_if<PFQSpec>(&spec.body)) {
    const PFQSpec augmented = p->appended({a}, {c});
    form.body = augmented;
    form.simplified = augmented.cancelled();
  } else {
    const auto& s = std::get<StreamBody>(spec.body);
    form.body = StreamBody{hypize(s.f, a, c), s.scale, s.power};
  }
  return form;
}

Complex LogAntiderivative::log_term(Complex x) const { return f0 * std::log(x); }

Complex LogAntiderivative::difference_term(Complex x, double tol) const {
  return (f.eval(rational_power(x, alpha), tol).value() - f0) / alpha.to_double();
}

Complex LogAntiderivative::extraction_term(Complex x, double tol) const {
  const Complex u = rational_power(x, alpha);
  if (!(std::abs(u) < hypized_derivative.radius()))
    throw DomainError("|x^alpha| inside the disk of f' (got " + format_real(std::abs(u)) + ")");
  return -(u / alpha.to_double()) * extract(1, hypized_derivative.eval(u, tol));
}

Complex LogAntiderivative::eval(Complex x, double tol) const {
  return log_term(x) + difference_term(x, tol) + extraction_term(x, tol);
}

LogAntiderivative antiderivative_log(Rational alpha, const CoeffStream& f) {
  if (alpha == Rational(0)) throw DomainError("alpha != 0");
  // f′ has coefficients (j+1) f_{j+1}; only the scalar parts of f are used.
  auto gen = [f, j = 0]() mutable {
    const Jet out((j + 1.0) * f.coeff(j + 1).value(), 1);
    ++j;
    return out;
  };
  const int degree = f.degree() < 0 ? -1 : std::max(f.degree() - 1, 0);
  const CoeffStream derivative(f.label() + "'", f.radius(), 1, gen, {}, degree);
  const CoeffStream h = hypize(derivative, Jet::variable(1.0, 1.0, 1), Jet::variable(2.0, 1.0, 1));
  return {alpha, f.coeff(0).value(), f, h};
}

IntegralResult definite_0_to_1(const IntegrandSpec& spec, const IntegrateOptions& opts) {
  IntegralResult r;
  const AntiderivativeForm form = antiderivative(spec);
  r.method.push_back("antiderivative: " + form.str());
  check_vanishes_at_zero(spec, r.method);
  const Complex gamma = spec.gamma();
  Jet body;
  if (std::abs(gamma - 1.0) <= 1e-15 && std::holds_alternative<PFQSpec>(form.body)) {
    const PFQSpec& aug = *form.simplified;
    if (aug.p() == 3 && aug.q() == 2) {
      // Cross-check the direct value at 1 against its Thomae image when admissible.
      const auto& u = aug.upper();
      const auto& l = aug.lower();
      body = eval_at_one(aug, opts.tol);
      try {
        const ThomaeImage img = thomae_shift(u[0], u[1], u[2], l[0], l[1]);
        const Jet shifted = img.eval(opts.tol);
        r.method.push_back("F(1): 3F2 at 1, Thomae cross-check gap " + format_real(distance(body, shifted)));
      } catch (const Error&) {
        r.method.push_back("F(1): 3F2 at 1");
      }
    } else {
      body = eval_at_one(aug, opts.tol);
      r.method.push_back("F(1): series at 1");
    }
  } else {
    body = form.eval_body(1.0, opts.tol);
    r.method.push_back("F(1): series at argument " + format_complex(gamma));
  }
  const Jet scaled = body * (spec.coefficient * form.prefactor_coeff.to_double());
  r.value = shift_down(scaled, spec.extract);
  if (opts.run_oracle) run_oracle(spec, false, r);
  return r;
}

IntegralResult definite_0_to_inf(const IntegrandSpec& spec, const IntegrateOptions& opts) {
  IntegralResult r;
  const Rational beta = spec.beta();
  const Complex gamma = spec.gamma();
  if (!(beta > Rational(0))) throw DomainError("beta > 0");
  if (gamma.imag() != 0.0 || !(gamma.real() < 0.0)) throw DomainError("gamma < 0 (argument tends to -infinity)");
  const auto* p = std::get_if<PFQSpec>(&spec.body);
  if (!p) throw DomainError("pFq body for the value at infinity");
  const AntiderivativeForm form = antiderivative(spec);
  r.method.push_back("antiderivative: " + form.str());
  check_vanishes_at_zero(spec, r.method);
  const Rational q = form.prefactor_exponent / beta;
  const PFQSpec& aug = *form.simplified;
  bool present = false;
  for (const Jet& a : aug.upper()) {
    if (a.is_scalar() && std::abs(a.value() - q.to_double()) <= 1e-14) present = true;
  }
  if (!present) throw DomainError("added parameter (alpha+1)/beta = " + q.str() + " survives cancellation");
  const AsymptoticTerm lim = limit_at_minus_infinity(aug);
  if (std::abs(lim.exponent.value() - q.to_double()) > 1e-14)
    throw DivergenceError("integral diverges at infinity: added parameter " + q.str() +
                          " is not the minimal upper parameter (" + format_jet(lim.exponent) + ")");
  r.method.push_back("F(inf): limit coefficient " + format_jet(lim.coefficient) + " times |gamma|^(-" + q.str() + ")");
  const double decay = std::pow(std::abs(gamma), -q.to_double());
  const Jet scaled = lim.coefficient * (spec.coefficient * form.prefactor_coeff.to_double() * decay);
  r.value = shift_down(scaled, spec.extract);
  if (opts.run_oracle) run_oracle(spec, true, r);
  return r;
}

double verify_ftc(const AntiderivativeForm& form, const std::vector<double>& points) {
  constexpr double h = 1e-5;
  constexpr double tight = 1e-15;
  double worst = 0.0;
  for (double x : points) {
    const Complex d = (form.eval(x + h, tight) - form.eval(x - h, tight)) / (2 * h);
    worst = std::max(worst, std::abs(d - form.integrand.eval(x, tight)));
  }
  return worst;
}

namespace {

PFQSpec S(const std::vector<Complex>& up, const std::vector<Complex>& lo, Complex scale, Rational power) {
  return PFQSpec::scalar(up, lo, scale, power, 0);
}

CatalogIntegrand entry(std::string label, Rational alpha, PFQSpec body, std::function<double(double)> elementary,
                       std::string closed, bool to_inf, std::vector<double> points, Complex coefficient = 1.0,
                       int extract = 0) {
  IntegrandSpec s{alpha, std::move(body), coefficient, extract, std::move(label), std::move(elementary)};
  return {std::move(s), std::move(closed), to_inf, std::move(points)};
}

double sqrt_power(double x, double beta) { return std::pow(oracle::elementary::sqrt1p_m1(x), beta); }

}  // namespace

const std::vector<CatalogIntegrand>& integrand_catalog() {
  static const std::vector<CatalogIntegrand> table = [] {
    std::vector<CatalogIntegrand> v;
    const std::vector<double> inner{0.1, 0.4, 0.7};
    v.push_back(entry("1/(1+x^2)", 0, S({1}, {}, -1.0, 2), [](double x) { return 1 / (1 + x * x); }, "pi/2", true,
                      inner));
    v.push_back(entry("1/(1+x^3)", 0, S({1}, {}, -1.0, 3), [](double x) { return 1 / (1 + x * x * x); },
                      "2pi/(3sqrt(3))", true, inner));
    v.push_back(entry("exp(-x^2)", 0, S({}, {}, -1.0, 2), [](double x) { return std::exp(-x * x); }, "sqrt(pi)/2",
                      true, inner));
    v.push_back(entry(
        "sqrt(sqrt(1+x)-1)/x^(11/8)", Rational(-7, 8), S({0.25, 0.75}, {1.5}, -1.0, 1),
        [](double x) { return std::sqrt(oracle::elementary::sqrt1p_m1(x)) * std::pow(x, -11.0 / 8); },
        "4Gamma(1/4)^2/(3sqrt(2-sqrt(2))sqrt(pi))", true, inner, 1 / std::sqrt(2.0)));
    v.push_back(entry("x^(-8/5)(sqrt(1+x)-1)", Rational(-3, 5), S({0.5, 1}, {2}, -1.0, 1),
                      [](double x) { return std::pow(x, -1.6) * sqrt_power(x, 1); }, "", true, inner, 0.5));
    v.push_back(entry("x^(-27/20)(sqrt(1+x)-1)^(1/2)", Rational(-17, 20), S({0.25, 0.75}, {1.5}, -1.0, 1),
                      [](double x) { return std::pow(x, -1.35) * sqrt_power(x, 0.5); }, "", true, inner,
                      1 / std::sqrt(2.0)));
    v.push_back(entry("x^(-7/5) y, 2y^5+y=x", Rational(-2, 5), trinomial_spec(5, 2.0).with_order(0),
                      [](double x) { return std::pow(x, -1.4) * oracle::elementary::trinomial_root(5, 2.0, x); }, "",
                      true, {0.1, 0.2, 0.3}));
    v.push_back(entry(
        "arctan(x) ln(1/(1+x^2))/x^(3/2)", Rational(-1, 2), jet_spec({{1, 1}, {0.5, 1}}, {{1.5, 0}}, 1, -1.0, 2),
        [](double x) { return -std::atan(x) * std::log1p(x * x) * std::pow(x, -1.5); }, "", true, inner, 1.0, 1));
    v.push_back(entry("arctan(x)/x", 0, S({1, 0.5}, {1.5}, -1.0, 2),
                      [](double x) { return x == 0 ? 1.0 : std::atan(x) / x; }, "G", false, inner));
    v.push_back(entry("(arcsin(x)/x)^3", -2, jet_spec({{0.5, -1}, {0.5, 1}}, {{1.5, 0}}, 2, 1.0, 2),
                      [](double x) { return x == 0 ? 1.0 : std::pow(std::asin(x) / x, 3); }, "3pi ln(2)/2 - pi^3/16",
                      false, {0.2, 0.5, 0.8}, -1.5, 2));
    v.push_back(entry(
        "x ln(1/(1-x^2)) K(x)", 1, jet_spec({{0.5, 1}, {0.5, 1}}, {{1, 0}}, 1, 1.0, 2),
        [](double x) { return x == 1 ? 0.0 : -x * std::log1p(-x * x) * oracle::elementary::ellipk(x, 1 - x); },
        "4(1-ln(2))", false, inner, kPi / 2, 1));
    v.push_back(entry("x ln(1/(1+x^2)) K(ix)", 1, jet_spec({{0.5, 1}, {0.5, 1}}, {{1, 0}}, 1, -1.0, 2),
                      [](double x) { return -x * std::log1p(x * x) * oracle::elementary::ellipk_imag(x); },
                      "((2-ln(2))Gamma(1/4)^2+4(ln(2)-4)Gamma(3/4)^2)/(4sqrt(2pi))", false, inner, kPi / 2, 1));
    v.push_back(entry("cos(x)", 0, S({}, {0.5}, -0.25, 2), [](double x) { return std::cos(x); }, "sin(1)", false,
                      inner));
    v.push_back(entry("sin(x)/x", 0, S({}, {1.5}, -0.25, 2),
                      [](double x) { return x == 0 ? 1.0 : std::sin(x) / x; }, "", false, inner));
    v.push_back(entry("x^(-1/2) exp(x)", Rational(-1, 2), S({}, {}, 1.0, 1),
                      [](double x) { return std::exp(x) / std::sqrt(x); }, "", false, inner));
    return v;
  }();
  return table;
}

}  // namespace hypint
