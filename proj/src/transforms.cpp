#include "hypint/transforms.hpp"

#include <cmath>
#include <map>
#include <regex>

#include "hypint/format.hpp"
#include "hypint/numkernel.hpp"
#include "hypint/oracle.hpp"

namespace hypint {

namespace {

constexpr double kLn2 = 0.69314718055994530942;
constexpr double kSqrtPi = 1.77245385090551602730;

Jet pow2(const Jet& e) { return jet_exp(e * kLn2); }

PFQSpec S0(const std::vector<Complex>& up, const std::vector<Complex>& lo, Complex scale = 1.0, Rational power = 1) {
  return PFQSpec::scalar(up, lo, scale, power, 0);
}

EvalOptions no_pfaff() {
  EvalOptions o;
  o.allow_pfaff = false;
  return o;
}

Complex v0(const Jet& j) { return j.value(); }
Jet J0(Complex v) { return Jet(v, 0); }

double uni(std::mt19937_64& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

}  // namespace

Jet PfaffImage::eval(double tol) const {
  EvalOptions o;
  o.tol = tol;
  return jet_mul(prefactor, eval_series(spec, argument, o));
}

PfaffImage pfaff(const PFQSpec& spec, Complex z, int pivot) {
  if (spec.p() != 2 || spec.q() != 1) throw DomainError("Pfaff transform applies to 2F1");
  if (pivot != 0 && pivot != 1) throw DomainError("pivot is 0 or 1");
  if (z.imag() == 0.0 && z.real() >= 1.0) throw DomainError("argument not in [1, inf)");
  const Jet& b = spec.upper()[pivot];
  const Jet& a = spec.upper()[1 - pivot];
  const Jet& c = spec.lower()[0];
  return {PFQSpec({c - a, b}, {c}), z / (z - 1.0), jet_pow(Jet(1.0 - z, spec.order()), -b)};
}

Jet kummer_at_minus1(const Jet& a, const Jet& b) {
  const Jet g = jet_mul(gamma_jet(1.0 + a - b), jet_mul(rgamma_jet((1.0 + a) / 2.0), rgamma_jet(1.0 + a / 2.0 - b)));
  return jet_mul(pow2(-a), g) * kSqrtPi;
}

Jet sum_at_half(const Jet& a, const Jet& b) {
  // Pfaff on a maps 2F1(a, b; 1+a−b; −1) to 2^{−a}·2F1(1+a−2b, a; 1+a−b; 1/2).
  const PfaffImage img = pfaff(PFQSpec({a, b}, {1.0 + a - b}), -1.0, 0);
  return jet_mul(kummer_at_minus1(a, b), reciprocal(img.prefactor));
}

PFQSpec clausen_square(const Jet& a, const Jet& b) {
  return PFQSpec({2.0 * a, a + b, 2.0 * b}, {a + b + 0.5, 2.0 * (a + b)});
}

Representation sqrt_power_rep(Complex beta) {
  Representation r;
  r.name = "sqrt_power(" + format_complex(beta) + ")";
  r.terms.push_back({std::pow(2.0, -beta), Rational(0), 0, S0({beta / 2.0, (beta + 1.0) / 2.0}, {beta + 1.0}, -1.0)});
  // (√(1+x) − 1)/x = 1/(√(1+x) + 1) has no cancellation.
  r.reference = [beta](Complex x) { return std::pow(1.0 / (std::sqrt(1.0 + x) + 1.0), beta); };
  return r;
}

Jet ParitySplit::eval(Complex x, double tol) const {
  const Jet e = hypint::eval(even, x, tol);
  const Jet o = hypint::eval(odd, x, tol);
  return e + jet_mul(odd_factor, o) * rational_power(x, odd_power);
}

ParitySplit parity_split(const PFQSpec& spec) {
  const int K = spec.order();
  std::vector<Jet> eu, el, ou, ol;
  Jet factor(spec.scale(), K);
  for (const Jet& a : spec.upper()) {
    eu.push_back(a / 2.0);
    eu.push_back((a + 1.0) / 2.0);
    ou.push_back((a + 1.0) / 2.0);
    ou.push_back((a + 2.0) / 2.0);
    factor = jet_mul(factor, a);
  }
  for (const Jet& c : spec.lower()) {
    el.push_back(c / 2.0);
    el.push_back((c + 1.0) / 2.0);
    ol.push_back((c + 1.0) / 2.0);
    ol.push_back((c + 2.0) / 2.0);
    factor = jet_mul(factor, reciprocal(c));
  }
  el.emplace_back(0.5, K);
  ol.emplace_back(1.5, K);
  const int excess = static_cast<int>(spec.p()) - static_cast<int>(spec.q()) - 1;
  const Complex scale = std::pow(4.0, excess) * spec.scale() * spec.scale();
  const Rational power = spec.power() * Rational(2);
  PFQSpec even = PFQSpec(eu, el, scale, power).cancelled();
  PFQSpec odd = PFQSpec(ou, ol, scale, power).cancelled();
  return {even, odd, factor, spec.power()};
}

PFQSpec real_part_rep(const Jet& a, const Jet& c) {
  const int K = a.order();
  return PFQSpec({Jet(1.0, K), a / 2.0, (a + 1.0) / 2.0}, {c / 2.0, (c + 1.0) / 2.0}, -1.0, 2);
}

Jet ThomaeImage::eval(double tol) const { return jet_mul(factor, eval_at_one(spec, tol)); }

ThomaeImage thomae_shift(const Jet& a1, const Jet& a2, const Jet& a3, const Jet& c1, const Jet& c2) {
  const Jet sigma = c1 + c2 - a1 - a2 - a3;
  if (!(sigma.value().real() > 0.0)) throw DivergenceError("3F2 at 1 diverges: parameter excess <= 0");
  const Jet shifted_excess = sigma + a1 + a2 - c1;
  if (!(shifted_excess.value().real() > 0.0))
    throw DivergenceError("shifted 3F2 at 1 diverges: parameter excess <= 0");
  const Jet factor =
      jet_mul(jet_mul(gamma_jet(c2), gamma_jet(sigma)), jet_mul(rgamma_jet(sigma + a3), rgamma_jet(c2 - a3)));
  return {factor, PFQSpec({a3, c1 - a1, c1 - a2}, {c1, sigma + a3})};
}

PFQSpec log_multiplier(Complex a, Complex b, int order) {
  return jet_spec({{a, 1.0}, {b, 1.0}}, {{a + b, 0.0}}, order);
}

Jet sum_unit_a_at_minus1(const Jet& a) {
  return jet_mul(a / 2.0, digamma_jet((a + 1.0) / 2.0) - digamma_jet(a / 2.0));
}

Jet kummer_derivative_at_minus1(const Jet& a, const Jet& b) {
  const Jet g = gamma_jet(a - b + 1.0);
  const Jet first = jet_mul(a, jet_mul(rgamma_jet((a + 1.0) / 2.0), rgamma_jet(a / 2.0 - b + 1.0))) * kSqrtPi;
  // Γ(−1/2) = −2√π.
  const Jet second = jet_mul(rgamma_jet(a / 2.0), rgamma_jet(a / 2.0 - b + 0.5)) * (-2.0 * kSqrtPi);
  return jet_mul(jet_mul(g, first + second), pow2(-(a + 1.0)));
}

Jet sum_half_half_two_at_minus1(const Jet& eps) {
  const Jet e = eps - 0.5;
  const Jet lead = reciprocal(jet_mul(jet_mul(e, e), pow2(eps + 0.5))) * kSqrtPi;
  const Jet first = jet_mul(e, jet_mul(rgamma_jet(0.25 + eps / 2.0), rgamma_jet(1.25 - eps / 2.0)));
  const Jet second = jet_mul(rgamma_jet(-0.25 + eps / 2.0), rgamma_jet(0.75 - eps / 2.0)) * 2.0;
  return jet_mul(lead, first - second);
}

PFQSpec trinomial_spec(int n, Complex alpha) {
  if (n < 2) throw DomainError("trinomial degree n >= 2");
  std::vector<Complex> up, lo;
  for (int j = 1; j < n; ++j) up.push_back(static_cast<double>(j) / n);
  up.push_back(1.0);
  for (int j = 2; j <= n; ++j) lo.push_back(static_cast<double>(j) / (n - 1));
  const Complex scale = -alpha * std::pow(static_cast<double>(n), n) / std::pow(static_cast<double>(n - 1), n - 1);
  return S0(up, lo, scale, Rational(n - 1)).cancelled();
}

Complex trinomial_root(int n, Complex alpha, Complex a) {
  const PFQSpec s = trinomial_spec(n, alpha);
  if (std::abs(s.argument(a)) >= 1.0)
    throw DivergenceError("trinomial series argument " + format_complex(s.argument(a)) + " outside the unit disk");
  return a * hypint::eval(s, a).value();
}

double Identity::residual(const Params& p) const {
  const Complex r = rhs(p);
  return std::abs(lhs(p) - r) / std::max(1.0, std::abs(r));
}

const std::vector<Identity>& identities() {
  static const std::vector<Identity> registry = [] {
    std::vector<Identity> v;
    v.push_back({"pfaff", "2F1(a,b;c;x) = (1-x)^-b 2F1(c-a,b;c;x/(x-1))", "a,b in (-1,2), c in (0.2,3), x in (-0.8,0.45)",
                 [](std::mt19937_64& g) {
                   return Identity::Params{uni(g, -1, 2), uni(g, -1, 2), uni(g, 0.2, 3), uni(g, -0.8, 0.45)};
                 },
                 [](const Identity::Params& p) { return v0(eval_series(S0({p[0], p[1]}, {p[2]}), p[3], no_pfaff())); },
                 [](const Identity::Params& p) { return v0(pfaff(S0({p[0], p[1]}, {p[2]}), p[3]).eval()); },
                 {1.0, 0.5, 1.5, -0.5}});
    v.push_back({"kummer_at_minus1", "2F1(a,b;1+a-b;-1) = 2^-a G(1+a-b) sqrt(pi)/(G((1+a)/2) G(1+a/2-b))",
                 "a in (0.1,2), b in (-0.5,0.6)",
                 [](std::mt19937_64& g) { return Identity::Params{uni(g, 0.1, 2), uni(g, -0.5, 0.6)}; },
                 [](const Identity::Params& p) {
                   return v0(eval_series(S0({p[0], p[1]}, {1.0 + p[0] - p[1]}), -1.0, no_pfaff()));
                 },
                 [](const Identity::Params& p) { return v0(kummer_at_minus1(J0(p[0]), J0(p[1]))); },
                 {1.0, 0.5}});
    v.push_back({"sum_at_half", "2F1(a,1+a-2b;1+a-b;1/2) = G(1+a-b) sqrt(pi)/(G((1+a)/2) G(1+a/2-b))",
                 "a in (0.1,2), b in (-0.5,0.8)",
                 [](std::mt19937_64& g) { return Identity::Params{uni(g, 0.1, 2), uni(g, -0.5, 0.8)}; },
                 [](const Identity::Params& p) {
                   return v0(eval_series(S0({p[0], 1.0 + p[0] - 2.0 * p[1]}, {1.0 + p[0] - p[1]}), 0.5));
                 },
                 [](const Identity::Params& p) { return v0(sum_at_half(J0(p[0]), J0(p[1]))); },
                 {1.0, 0.5}});
    v.push_back({"clausen_square", "2F1(a,b;a+b+1/2;x)^2 = 3F2(2a,a+b,2b;a+b+1/2,2a+2b;x)",
                 "a,b in (0.05,1), x in (-0.85,0.85)",
                 [](std::mt19937_64& g) { return Identity::Params{uni(g, 0.05, 1), uni(g, 0.05, 1), uni(g, -0.85, 0.85)}; },
                 [](const Identity::Params& p) {
                   const Complex f = v0(eval_series(S0({p[0], p[1]}, {p[0] + p[1] + 0.5}), p[2]));
                   return f * f;
                 },
                 [](const Identity::Params& p) { return v0(eval_series(clausen_square(J0(p[0]), J0(p[1])), p[2])); },
                 {0.25, 0.75, 0.5}});
    v.push_back({"sqrt_power", "((sqrt(1+x)-1)/x)^b = 2^-b 2F1(b/2,(b+1)/2;b+1;-x)", "b in (-0.9,3), x in (0,5)",
                 [](std::mt19937_64& g) { return Identity::Params{uni(g, -0.9, 3), uni(g, 0.0, 5)}; },
                 [](const Identity::Params& p) { return sqrt_power_rep(p[0]).reference(p[1]); },
                 [](const Identity::Params& p) { return sqrt_power_rep(p[0]).eval(p[1]); },
                 {0.5, 3.0}});
    v.push_back({"parity_split", "pFq(x) = even part(x^2) + x * odd part(x^2)",
                 "2F1 with a,b in (-1,2), c in (0.2,3), x in (-0.85,0.85)",
                 [](std::mt19937_64& g) {
                   return Identity::Params{uni(g, -1, 2), uni(g, -1, 2), uni(g, 0.2, 3), uni(g, -0.85, 0.85)};
                 },
                 [](const Identity::Params& p) { return v0(eval(S0({p[0], p[1]}, {p[2]}), p[3])); },
                 [](const Identity::Params& p) { return v0(parity_split(S0({p[0], p[1]}, {p[2]})).eval(p[3])); },
                 {1.0, 0.5, 1.5, 0.5}});
    v.push_back({"real_part", "3F2(1,a/2,(a+1)/2;c/2,(c+1)/2;-x^2) = Re 2F1(1,a;c;ix)",
                 "a in (0.2,2), c in (0.3,4), x in (0,0.9)",
                 [](std::mt19937_64& g) { return Identity::Params{uni(g, 0.2, 2), uni(g, 0.3, 4), uni(g, 0, 0.9)}; },
                 [](const Identity::Params& p) { return v0(eval(real_part_rep(J0(p[0]), J0(p[1])), p[2])); },
                 [](const Identity::Params& p) {
                   return Complex(v0(eval_series(S0({1.0, p[0]}, {p[1]}), Complex(0.0, p[2].real()))).real());
                 },
                 {1.0, 1.5, 1.0 / std::sqrt(3.0)}});
    v.push_back({"thomae_shift",
                 "3F2(a1,a2,a3;c1,c2;1) = G(c2)G(s)/(G(s+a3)G(c2-a3)) 3F2(a3,c1-a1,c1-a2;c1,s+a3;1)",
                 "a1,a2 in (0.1,1.5), a3 in (-0.5,1), c1 in (0.5,2.5), both excesses >= 0.8",
                 [](std::mt19937_64& g) {
                   for (;;) {
                     const double a1 = uni(g, 0.1, 1.5), a2 = uni(g, 0.1, 1.5), a3 = uni(g, -0.5, 1);
                     const double c1 = uni(g, 0.5, 2.5), sigma = uni(g, 0.8, 2.0);
                     const double c2 = sigma + a1 + a2 + a3 - c1;
                     if (c2 < 0.1 || sigma + a1 + a2 - c1 < 0.8) continue;
                     if (near_nonpositive_integer(c2 - a3, 0.05)) continue;
                     return Identity::Params{a1, a2, a3, c1, c2};
                   }
                 },
                 [](const Identity::Params& p) { return v0(eval_at_one(S0({p[0], p[1], p[2]}, {p[3], p[4]}))); },
                 [](const Identity::Params& p) {
                   return v0(thomae_shift(J0(p[0]), J0(p[1]), J0(p[2]), J0(p[3]), J0(p[4])).eval());
                 },
                 {0.5, 0.5, -0.5, 0.5, 1.5}});
    v.push_back({"log_multiplier", "[eps] 2F1(a+eps,b+eps;a+b;x) = ln(1/(1-x)) 2F1(a,b;a+b;x)",
                 "a,b in (0.1,1.5), x in (-0.85,0.85)",
                 [](std::mt19937_64& g) { return Identity::Params{uni(g, 0.1, 1.5), uni(g, 0.1, 1.5), uni(g, -0.85, 0.85)}; },
                 [](const Identity::Params& p) { return extract(1, eval_series(log_multiplier(p[0], p[1]), p[2])); },
                 [](const Identity::Params& p) {
                   return std::log(1.0 / (1.0 - p[2])) * v0(eval_series(S0({p[0], p[1]}, {p[0] + p[1]}), p[2]));
                 },
                 {0.5, 0.5, 0.25}});
    v.push_back({"sum_unit_a_at_minus1", "2F1(1,a;a+1;-1) = (a/2)(psi((a+1)/2) - psi(a/2))", "a in (0.1,3)",
                 [](std::mt19937_64& g) { return Identity::Params{uni(g, 0.1, 3)}; },
                 [](const Identity::Params& p) { return v0(eval_series(S0({1.0, p[0]}, {p[0] + 1.0}), -1.0, no_pfaff())); },
                 [](const Identity::Params& p) { return v0(sum_unit_a_at_minus1(J0(p[0]))); },
                 {1.0}});
    v.push_back({"kummer_derivative_at_minus1",
                 "(ab/(1+a-b)) 2F1(a+1,b+1;2+a-b;-1) = a 2^-(a+1) G(a-b+1) sqrt(pi)/(G((a+1)/2) G(a/2-b+1)) + "
                 "2^-(a+1) G(a-b+1) G(-1/2)/(G(a/2) G(a/2-b+1/2))",
                 "a in (-0.4,1.5), b in (-0.45,0.4)",
                 [](std::mt19937_64& g) { return Identity::Params{uni(g, -0.4, 1.5), uni(g, -0.45, 0.4)}; },
                 [](const Identity::Params& p) {
                   const Complex a = p[0], b = p[1];
                   return a * b / (1.0 + a - b) *
                          v0(eval_series(S0({a + 1.0, b + 1.0}, {2.0 + a - b}), -1.0, no_pfaff()));
                 },
                 [](const Identity::Params& p) { return v0(kummer_derivative_at_minus1(J0(p[0]), J0(p[1]))); },
                 {-0.5, -0.5}});
    v.push_back({"trinomial_root", "y = a nF(n-1)(...) solves alpha y^n + y = a",
                 "n in 2..6, alpha in (0.01,0.3), a in (0,0.5), |series argument| < 0.9",
                 [](std::mt19937_64& g) {
                   for (;;) {
                     const int n = std::uniform_int_distribution<int>(2, 6)(g);
                     const double alpha = uni(g, 0.01, 0.3), a = uni(g, 0.0, 0.5);
                     if (std::abs(trinomial_spec(n, alpha).argument(a)) < 0.9)
                       return Identity::Params{static_cast<double>(n), alpha, a};
                   }
                 },
                 [](const Identity::Params& p) {
                   const int n = static_cast<int>(p[0].real());
                   const Complex y = trinomial_root(n, p[1], p[2]);
                   return p[1] * std::pow(y, n) + y;
                 },
                 [](const Identity::Params& p) { return p[2]; },
                 {5.0, 0.1, 0.3}});
    v.push_back({"rogers_dougall",
                 "4F3(-j,a,b,1/2-a-b-j;1-a-j,1-b-j,a+b+1/2;1) = (2a)_j(a+b)_j(2b)_j/((2a+2b)_j(a)_j(b)_j)",
                 "j in 0..8, a,b in (0.1,1.3)",
                 [](std::mt19937_64& g) {
                   return Identity::Params{static_cast<double>(std::uniform_int_distribution<int>(0, 8)(g)),
                                           uni(g, 0.1, 1.3), uni(g, 0.1, 1.3)};
                 },
                 [](const Identity::Params& p) {
                   const Complex j = p[0], a = p[1], b = p[2];
                   return v0(eval_series(S0({-j, a, b, 0.5 - a - b - j}, {1.0 - a - j, 1.0 - b - j, a + b + 0.5}), 1.0));
                 },
                 [](const Identity::Params& p) {
                   const int j = static_cast<int>(p[0].real());
                   const Complex a = p[1], b = p[2];
                   return pochhammer(2.0 * a, j) * pochhammer(a + b, j) * pochhammer(2.0 * b, j) /
                          (pochhammer(2.0 * a + 2.0 * b, j) * pochhammer(a, j) * pochhammer(b, j));
                 },
                 {3.0, 0.3, 0.6}});
    v.push_back({"bessel_product", "0F1(;a;x) 0F1(;b;x) = 2F3((a+b-1)/2,(a+b)/2;a,b,a+b-1;4x)",
                 "a,b in (0.3,3) with a+b > 1.2, x in (-5,5)",
                 [](std::mt19937_64& g) {
                   for (;;) {
                     const double a = uni(g, 0.3, 3), b = uni(g, 0.3, 3);
                     if (a + b > 1.2) return Identity::Params{a, b, uni(g, -5, 5)};
                   }
                 },
                 [](const Identity::Params& p) {
                   return v0(eval_series(S0({}, {p[0]}), p[2])) * v0(eval_series(S0({}, {p[1]}), p[2]));
                 },
                 [](const Identity::Params& p) {
                   const Complex a = p[0], b = p[1];
                   return v0(eval_series(S0({(a + b - 1.0) / 2.0, (a + b) / 2.0}, {a, b, a + b - 1.0}), 4.0 * p[2]));
                 },
                 {0.5, 1.5, -1.0}});
    v.push_back({"exp_pi_t", "2F1(it,-it;1/2;1) + 2t 2F1(1/2+it,1/2-it;3/2;1) = exp(pi t)", "t in (0,2)",
                 [](std::mt19937_64& g) { return Identity::Params{uni(g, 0.0, 2.0)}; },
                 [](const Identity::Params& p) {
                   const Complex it(0.0, p[0].real());
                   return v0(eval_at_one(S0({it, -it}, {0.5}))) +
                          2.0 * p[0] * v0(eval_at_one(S0({0.5 + it, 0.5 - it}, {1.5})));
                 },
                 [](const Identity::Params& p) { return std::exp(kPi * p[0]); },
                 {1.0}});
    return v;
  }();
  return registry;
}

const Identity& identity(const std::string& name) {
  for (const Identity& id : identities())
    if (id.name == name) return id;
  throw UnknownName(name);
}

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

// Σ n^{−k} with an Euler–Maclaurin tail after 1000 terms.
double zeta_reference(int k) {
  const int N = 1000;
  double s = 0.0;
  for (int n = N - 1; n >= 1; --n) s += std::pow(static_cast<double>(n), -k);
  const double Nd = N;
  s += std::pow(Nd, 1.0 - k) / (k - 1) + 0.5 * std::pow(Nd, -k) + k / 12.0 * std::pow(Nd, -k - 1.0) -
       k * (k + 1.0) * (k + 2.0) / 720.0 * std::pow(Nd, -k - 3.0);
  return s;
}

Complex polylog_reference(int n, Complex x) {
  Complex s = 0.0, xk = 1.0;
  for (int k = 1; k < 100000; ++k) {
    xk *= x;
    const Complex t = xk / std::pow(static_cast<double>(k), n);
    s += t;
    if (std::abs(t) < 1e-18 * std::abs(s)) break;
  }
  return s;
}

Complex harmonic_egf_reference(Complex x) {
  Complex s = 0.0, t = 1.0;
  double h = 0.0;
  for (int k = 1; k < 10000; ++k) {
    t *= x / static_cast<double>(k);
    h += 1.0 / k;
    s += h * t;
    if (k > 2 * std::abs(x) + 10 && std::abs(h * t) < 1e-18 * std::abs(s)) break;
  }
  return s;
}

double quad_reference(double (*f)(double), double x) {
  if (x == 0.0) return 0.0;
  // f odd, so the integrand f(t)/t is even.
  const auto r =
      oracle::quad_finite(oracle::RealFn([f](double t) { return t == 0.0 ? 1.0 : f(t) / t; }), 0.0, std::abs(x), 1e-13);
  return std::copysign(r.value, x);
}

struct Args {
  std::string base;
  std::vector<double> values;
};

double parse_number(const std::string& s) {
  const auto slash = s.find('/');
  std::size_t used = 0;
  try {
    if (slash != std::string::npos) {
      const double num = std::stod(s.substr(0, slash));
      const double den = std::stod(s.substr(slash + 1));
      return num / den;
    }
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::logic_error&) {
    throw DomainError("numeric catalog argument (got '" + s + "')");
  }
}

Args parse_args(const std::string& name) {
  static const std::regex form(R"(^\s*([A-Za-z_][A-Za-z0-9_]*)\s*(?:\((.*)\))?\s*$)");
  std::smatch m;
  if (!std::regex_match(name, m, form)) throw UnknownName(name);
  Args a{m[1].str(), {}};
  const std::string inner = m[2].str();
  std::size_t start = 0;
  while (start < inner.size()) {
    const auto comma = inner.find(',', start);
    std::string piece = inner.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    piece.erase(0, piece.find_first_not_of(' '));
    piece.erase(piece.find_last_not_of(' ') + 1);
    a.values.push_back(parse_number(piece));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return a;
}

int int_arg(const Args& a, std::size_t i, int lo, int hi) {
  if (a.values.size() <= i) throw DomainError(a.base + " takes an integer argument");
  const double v = a.values[i];
  if (v != std::floor(v) || v < lo || v > hi)
    throw DomainError(a.base + " argument in " + std::to_string(lo) + ".." + std::to_string(hi));
  return static_cast<int>(v);
}

void arity(const Args& a, std::size_t n) {
  if (a.values.size() != n) throw DomainError(a.base + " takes " + std::to_string(n) + " argument(s)");
}

RepTerm term(Complex coef, Rational shift, int extract, PFQSpec spec) { return {coef, shift, extract, std::move(spec)}; }

Representation make(std::string name, std::vector<RepTerm> terms, std::function<Complex(Complex)> reference,
                    bool constant = false, std::string closed = "") {
  Representation r;
  r.name = std::move(name);
  r.terms = std::move(terms);
  r.reference = std::move(reference);
  r.constant = constant;
  r.closed_form = std::move(closed);
  return r;
}

constexpr double kCatalanValue = 0.91596559417721901505;
constexpr double kAperyValue = 1.20205690315959428540;

}  // namespace

std::vector<std::string> catalog_names() {
  return {"zeta(k)",        "eta(k)",         "ln_pow(k,a)",   "half_sqrt_log(k)", "arcsin_even(k)",
          "arcsin_odd(k)",  "harmonic_egf",   "polylog(n)",    "catalan_3F2",      "lemniscate",
          "apery",          "gelfond",        "arcsin_cubed",  "exp",              "cos",
          "sin_over_x",     "sinc_squared",   "ln_one_minus",  "arctan",           "arcsin",
          "arcsin_squared", "erf",            "si",            "ti",               "sqrt_power(b)"};
}

Representation catalog(const std::string& name) {
  const Args a = parse_args(name);
  const std::string& b = a.base;
  if (b == "zeta" || b == "eta") {
    arity(a, 1);
    const int k = int_arg(a, 0, b == "zeta" ? 2 : 1, 12);
    std::vector<Complex> up(k + 1, 1.0), lo(k, 2.0);
    const double sign = b == "zeta" ? 1.0 : -1.0;
    auto ref = [k, sign](Complex) -> Complex {
      if (sign < 0 && k == 1) return kLn2;
      const double z = zeta_reference(k);
      return sign > 0 ? z : (1.0 - std::pow(2.0, 1 - k)) * z;
    };
    std::string closed;
    if (b == "zeta" && k == 2) closed = "pi^2/6";
    if (b == "zeta" && k == 4) closed = "pi^4/90";
    if (b == "eta" && k == 1) closed = "ln 2";
    if (b == "eta" && k == 2) closed = "pi^2/12";
    return make(b + "(" + std::to_string(k) + ")", {term(1.0, 0, 0, S0(up, lo, sign))}, ref, true, closed);
  }
  if (b == "ln_pow") {
    arity(a, 2);
    const int k = int_arg(a, 0, 0, kMaxJetOrder);
    const double s = a.values[1];
    // [ε^k] of (1−x)^{−s−ε} is ln^k(1/(1−x))/k!.
    return make(name, {term(factorial(k), 0, k, jet_spec({{s, 1.0}}, {}, k))}, [k, s](Complex x) {
      return std::pow(1.0 - x, -s) * std::pow(std::log(1.0 / (1.0 - x)), k);
    });
  }
  if (b == "half_sqrt_log") {
    arity(a, 1);
    const int k = int_arg(a, 0, 0, kMaxJetOrder);
    return make(name,
                {term(factorial(k) / std::pow(-2.0, k), 0, k, jet_spec({{0.0, 1.0}, {0.5, 1.0}}, {{1.0, 2.0}}, k))},
                [k](Complex x) { return std::pow(std::log((1.0 + std::sqrt(1.0 - x)) / 2.0), k); });
  }
  if (b == "arcsin_even") {
    arity(a, 1);
    const int k = int_arg(a, 0, 0, kMaxJetOrder / 2);
    return make(name,
                {term(factorial(2 * k) / std::pow(-4.0, k), 0, 2 * k,
                      jet_spec({{0.0, -1.0}, {0.0, 1.0}}, {{0.5, 0.0}}, 2 * k, 1.0, 2))},
                [k](Complex x) { return std::pow(std::asin(x), 2 * k); });
  }
  if (b == "arcsin_odd") {
    arity(a, 1);
    const int k = int_arg(a, 0, 0, kMaxJetOrder / 2);
    return make(name,
                {term(factorial(2 * k + 1) / std::pow(-4.0, k), 1, 2 * k,
                      jet_spec({{0.5, 1.0}, {0.5, -1.0}}, {{1.5, 0.0}}, 2 * k, 1.0, 2))},
                [k](Complex x) { return std::pow(std::asin(x), 2 * k + 1); });
  }
  if (b == "harmonic_egf") {
    arity(a, 0);
    return make(name, {term(1.0, 0, 1, jet_spec({{1.0, 0.0}}, {{1.0, -1.0}}, 1))}, harmonic_egf_reference);
  }
  if (b == "polylog") {
    arity(a, 1);
    const int n = int_arg(a, 0, 1, kMaxJetOrder);
    std::vector<std::pair<Complex, Complex>> up(n, {0.0, 1.0}), lo(n - 1, {1.0, 0.0});
    return make(name, {term(1.0, 0, n, jet_spec(up, lo, n))}, [n](Complex x) { return polylog_reference(n, x); });
  }
  if (b == "catalan_3F2") {
    arity(a, 0);
    return make(name, {term(1.0, 0, 0, S0({0.5, 0.5, 1.0}, {1.5, 1.5}, -1.0))},
                [](Complex) { return Complex(kCatalanValue); }, true, "G");
  }
  if (b == "lemniscate") {
    arity(a, 0);
    return make(name, {term(4.0 * std::sqrt(2.0), 0, 0, S0({0.5, 0.25}, {1.25}))},
                [](Complex) { return cgamma(0.25) * cgamma(0.25) / kSqrtPi; }, true, "Gamma(1/4)^2/sqrt(pi)");
  }
  if (b == "apery") {
    arity(a, 0);
    return make(name, {term(1.0, 0, 0, S0({1, 1, 1, 1}, {2, 2, 2}))}, [](Complex) { return Complex(kAperyValue); },
                true, "zeta(3)");
  }
  if (b == "gelfond") {
    arity(a, 0);
    const Complex i(0.0, 1.0);
    return make(name, {term(1.0, 0, 0, S0({i, -i}, {0.5})), term(2.0, 0, 0, S0({0.5 + i, 0.5 - i}, {1.5}))},
                [](Complex) { return Complex(std::exp(kPi)); }, true, "e^pi");
  }
  if (b == "arcsin_cubed") {
    arity(a, 0);
    return make(name, {term(-1.5, 1, 2, jet_spec({{0.5, -1.0}, {0.5, 1.0}}, {{1.5, 0.0}}, 2, 1.0, 2))},
                [](Complex x) { return std::pow(std::asin(x), 3); });
  }
  if (b == "exp") {
    arity(a, 0);
    return make(name, {term(1.0, 0, 0, S0({}, {}))}, [](Complex x) { return std::exp(x); });
  }
  if (b == "cos") {
    arity(a, 0);
    return make(name, {term(1.0, 0, 0, S0({}, {0.5}, -0.25, 2))}, [](Complex x) { return std::cos(x); });
  }
  if (b == "sin_over_x") {
    arity(a, 0);
    return make(name, {term(1.0, 0, 0, S0({}, {1.5}, -0.25, 2))},
                [](Complex x) { return x == Complex(0.0) ? Complex(1.0) : std::sin(x) / x; });
  }
  if (b == "sinc_squared") {
    arity(a, 0);
    return make(name, {term(1.0, 0, 0, S0({1.0}, {2.0, 1.5}, -1.0, 2))}, [](Complex x) {
      const Complex s = x == Complex(0.0) ? Complex(1.0) : std::sin(x) / x;
      return s * s;
    });
  }
  if (b == "ln_one_minus") {
    arity(a, 0);
    return make(name, {term(1.0, 1, 0, S0({1, 1}, {2}))}, [](Complex x) { return -std::log(1.0 - x); });
  }
  if (b == "arctan") {
    arity(a, 0);
    return make(name, {term(1.0, 1, 0, S0({1.0, 0.5}, {1.5}, -1.0, 2))}, [](Complex x) { return std::atan(x); });
  }
  if (b == "arcsin") {
    arity(a, 0);
    return make(name, {term(1.0, 1, 0, S0({0.5, 0.5}, {1.5}, 1.0, 2))}, [](Complex x) { return std::asin(x); });
  }
  if (b == "arcsin_squared") {
    arity(a, 0);
    return make(name, {term(1.0, 2, 0, S0({1, 1, 1}, {2.0, 1.5}, 1.0, 2))}, [](Complex x) {
      const Complex s = std::asin(x);
      return s * s;
    });
  }
  if (b == "erf") {
    arity(a, 0);
    return make(name, {term(2.0 / kSqrtPi, 1, 0, S0({0.5}, {1.5}, -1.0, 2))},
                [](Complex x) { return Complex(std::erf(x.real())); });
  }
  if (b == "si") {
    arity(a, 0);
    return make(name, {term(1.0, 1, 0, S0({0.5}, {1.5, 1.5}, -0.25, 2))},
                [](Complex x) { return Complex(quad_reference([](double t) { return std::sin(t); }, x.real())); });
  }
  if (b == "ti") {
    arity(a, 0);
    return make(name, {term(1.0, 1, 0, S0({1.0, 0.5, 0.5}, {1.5, 1.5}, -1.0, 2))},
                [](Complex x) { return Complex(quad_reference([](double t) { return std::atan(t); }, x.real())); });
  }
  if (b == "sqrt_power") {
    arity(a, 1);
    Representation r = sqrt_power_rep(a.values[0]);
    r.name = name;
    return r;
  }
  throw UnknownName(name);
}

}  // namespace hypint
