#include "recognize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "hypint/numkernel.hpp"
#include "hypint/transforms.hpp"

namespace hypint::cli {

namespace {

// coefficient · x^alpha · [ε^extract] body, body absent meaning 1.
struct Term {
  Complex coeff = 1.0;
  Rational alpha = 0;
  bool has_body = false;
  std::vector<Jet> upper, lower;
  Complex scale = 0.0;
  Rational power = 1;
  int extract = 0;
};

Term mono(Complex coeff, Rational alpha) {
  Term t;
  t.coeff = coeff;
  t.alpha = alpha;
  return t;
}

using Terms = std::vector<Term>;

class Splitter {
 public:
  explicit Splitter(int order) : order_(order) {}

  Terms split(const ExprPtr& e) {
    if (!depends_on_x(e)) return {constant(scalar(e, "a constant factor"))};
    const auto& k = e->kids;
    switch (e->op) {
      case Op::Var: return {mono(1.0, 1)};
      case Op::Neg: return scaled(split(k[0]), -1.0);
      case Op::Add: return concat(split(k[0]), split(k[1]));
      case Op::Sub: return concat(split(k[0]), scaled(split(k[1]), -1.0));
      case Op::Mul: return product(split(k[0]), split(k[1]));
      case Op::Div: return product(split(k[0]), power(k[1], Jet(-1.0, order_)));
      case Op::Pow:
        if (depends_on_x(k[1])) throw DomainError("exponent depends on x");
        return power(k[0], evaluate(k[1], 0.0, order_));
      case Op::Func: return function(e->name, k[0]);
      case Op::PFQ: return series(e);
      case Op::Extract: return extraction(e->k, split(k[0]));
      default: break;
    }
    throw DomainError("unsupported integrand construct");
  }

 private:
  int order_;

  Complex scalar(const ExprPtr& e, const char* what) {
    const Jet v = evaluate(e, 0.0, order_);
    if (!v.is_scalar()) throw DomainError(std::string(what) + " depends on eps outside a pFq parameter");
    return v.value();
  }

  static Term constant(Complex c) { return mono(c, 0); }

  static bool is_monomial(const Term& t) { return !t.has_body && t.extract == 0; }

  static Terms scaled(Terms ts, Complex c) {
    for (Term& t : ts) t.coeff *= c;
    return ts;
  }

  static Terms concat(Terms a, const Terms& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  }

  static Term multiply(const Term& a, const Term& b) {
    if (a.has_body && b.has_body) throw DomainError("product of two hypergeometric factors");
    if (a.extract > 0 && b.extract > 0) throw DomainError("product of two extracted factors");
    Term t = a.has_body ? a : b;
    t.coeff = a.coeff * b.coeff;
    t.alpha = a.alpha + b.alpha;
    t.extract = std::max(a.extract, b.extract);
    return t;
  }

  static Terms product(const Terms& a, const Terms& b) {
    Terms out;
    for (const Term& s : a)
      for (const Term& t : b) out.push_back(multiply(s, t));
    return out;
  }

  Term body(Complex coeff, Rational alpha, std::vector<Complex> up, std::vector<Complex> lo, Complex scale,
            Rational power) const {
    Term t = mono(coeff, alpha);
    t.has_body = true;
    for (Complex a : up) t.upper.emplace_back(a, order_);
    for (Complex c : lo) t.lower.emplace_back(c, order_);
    t.scale = scale;
    t.power = power;
    return t;
  }

  static Rational rational_exponent(const Jet& ex) {
    Rational r;
    if (!ex.is_scalar() || ex.value().imag() != 0.0 || !Rational::approximate(ex.value().real(), r, 10000, 1e-14))
      throw DomainError("x raised to a non-rational power");
    return r;
  }

  // k + c·x^β split out of a two-term (or one-term, k = 0) sum.
  struct Binomial {
    Complex k = 0.0, c = 0.0;
    Rational beta = 0;
  };
  static std::optional<Binomial> binomial(const Terms& ts) {
    Binomial b;
    bool have_mono = false;
    for (const Term& t : ts) {
      if (!is_monomial(t)) return std::nullopt;
      if (t.alpha == Rational(0)) {
        b.k += t.coeff;
      } else if (!have_mono) {
        b.c = t.coeff;
        b.beta = t.alpha;
        have_mono = true;
      } else if (t.alpha == b.beta) {
        b.c += t.coeff;
      } else {
        return std::nullopt;
      }
    }
    if (!have_mono || b.c == Complex(0.0)) return std::nullopt;
    return b;
  }

  static std::optional<int> integer_exponent(const Jet& ex) {
    if (!ex.is_scalar() || ex.value().imag() != 0.0) return std::nullopt;
    const double r = ex.value().real();
    if (r != std::round(r) || std::abs(r) > 64) return std::nullopt;
    return static_cast<int>(r);
  }

  // arcsin(c x^β)^n from the catalog representation in u = c x^β.
  Terms arcsin_power(const ExprPtr& arg, int n) {
    const auto b = binomial(split(arg));
    if (!b || b->k != Complex(0.0)) throw DomainError("arcsin of a non-monomial argument");
    const Representation rep = catalog(n == 2 ? "arcsin_squared" : "arcsin_cubed");
    Terms out;
    for (const RepTerm& rt : rep.terms) {
      if (rt.extract > order_) throw DomainError("jet order too small for arcsin power");
      const PFQSpec spec = rt.spec.with_order(order_);
      Term t = mono(rt.coefficient * rational_power(b->c, rt.shift), b->beta * rt.shift);
      t.has_body = true;
      t.upper = spec.upper();
      t.lower = spec.lower();
      t.scale = spec.scale() * rational_power(b->c, spec.power());
      t.power = spec.power() * b->beta;
      t.extract = rt.extract;
      out.push_back(std::move(t));
    }
    return out;
  }

  Terms power(const ExprPtr& base, const Jet& ex) {
    if (const auto n = integer_exponent(ex)) {
      const auto& k = base->kids;
      if (base->op == Op::Mul) return product(power(k[0], ex), power(k[1], ex));
      if (base->op == Op::Div) return product(power(k[0], ex), power(k[1], -ex));
      if (base->op == Op::Func && base->name == "arcsin" && (*n == 2 || *n == 3)) return arcsin_power(k[0], *n);
    }
    const Terms ts = split(base);
    if (ts.size() == 1 && is_monomial(ts[0])) {
      const Rational r = rational_exponent(ex);
      return {mono(rational_power(ts[0].coeff, r), ts[0].alpha * r)};
    }
    if (ts.size() == 1 && ex.is_scalar() && ex.value() == Complex(1.0)) return ts;
    const auto b = binomial(ts);
    if (!b || b->k == Complex(0.0)) throw DomainError("cannot write this power as a hypergeometric term");
    Complex front = 1.0;
    if (b->k != Complex(1.0)) {
      if (!ex.is_scalar()) throw DomainError("eps-dependent power of a binomial whose constant is not 1");
      front = std::pow(b->k, ex.value());
    }
    // (k + c x^β)^r = k^r · 1F0(−r;; −(c/k) x^β).
    Term t = mono(front, 0);
    t.has_body = true;
    t.upper = {-ex};
    t.scale = -b->c / b->k;
    t.power = b->beta;
    return {t};
  }

  Terms function(const std::string& name, const ExprPtr& arg) {
    if (name == "sqrt") return power(arg, Jet(0.5, order_));
    if (name == "ln") {
      // ln(1/b) = −ln b and ln(b^r) = r ln b.
      if (arg->op == Op::Div && !depends_on_x(arg->kids[0]))
        return concat({constant(std::log(scalar(arg->kids[0], "a logarithm numerator")))},
                      scaled(function("ln", arg->kids[1]), -1.0));
      if (arg->op == Op::Pow && !depends_on_x(arg->kids[1]))
        return scaled(function("ln", arg->kids[0]), scalar(arg->kids[1], "a logarithm exponent"));
    }
    const auto b = binomial(split(arg));
    if (!b) throw DomainError(name + " of a non-monomial argument");
    const Complex c = b->c;
    const Rational beta = b->beta;
    if (name == "exp")
      return {body(std::exp(b->k), 0, {}, {}, c, beta)};
    if (name == "ln") {
      if (b->k == Complex(0.0)) throw DomainError("ln of a monomial");
      const Complex w = c / b->k;
      // ln(k + c x^β) = ln k + w x^β 2F1(1,1;2;−w x^β).
      Terms out{body(w, beta, {1, 1}, {2}, -w, beta)};
      if (b->k != Complex(1.0)) out.push_back(constant(std::log(b->k)));
      return out;
    }
    if (b->k != Complex(0.0)) throw DomainError(name + " of a shifted argument");
    if (name == "arctan") return {body(c, beta, {1, 0.5}, {1.5}, -c * c, beta * Rational(2))};
    if (name == "arcsin") return {body(c, beta, {0.5, 0.5}, {1.5}, c * c, beta * Rational(2))};
    throw DomainError("unsupported function " + name);
  }

  Terms series(const ExprPtr& e) {
    Term t = mono(1.0, 0);
    t.has_body = true;
    for (int j = 0; j < e->p + e->q; ++j) {
      if (depends_on_x(e->kids[j])) throw DomainError("pFq parameters must not depend on x");
      (j < e->p ? t.upper : t.lower).push_back(evaluate(e->kids[j], 0.0, order_));
    }
    const Terms arg = split(e->kids.back());
    if (arg.size() != 1 || !is_monomial(arg[0])) throw DomainError("pFq argument must be a monomial c*x^b");
    t.scale = arg[0].coeff;
    t.power = arg[0].alpha;
    return {t};
  }

  static Terms extraction(int k, const Terms& inner) {
    Terms out;
    for (Term t : inner) {
      if (t.extract > 0) throw DomainError("nested eps extraction");
      if (!t.has_body && k > 0) continue;  // no ε dependence: coefficient is zero
      t.extract = k;
      out.push_back(t);
    }
    return out;
  }
};

struct Basis {
  const char* num;
  const char* den;
  double value;
};

const std::vector<Basis>& basis() {
  static const std::vector<Basis> b = [] {
    const double pi = kPi, g14 = cgamma(0.25).real();
    return std::vector<Basis>{
        {"", "", 1.0},
        {"π", "", pi},
        {"π", "√3", pi / std::sqrt(3.0)},
        {"π", "√2", pi / std::sqrt(2.0)},
        {"π", "√6", pi / std::sqrt(6.0)},
        {"π²", "", pi * pi},
        {"π³", "", pi * pi * pi},
        {"√π", "", std::sqrt(pi)},
        {"√2", "", std::sqrt(2.0)},
        {"√3", "", std::sqrt(3.0)},
        {"ln 2", "", std::log(2.0)},
        {"π ln 2", "", pi * std::log(2.0)},
        {"G", "", 0.915965594177219015054603514932},
        {"ζ(3)", "", 1.20205690315959428539973816151},
        {"Γ(1/4)²", "√π", g14 * g14 / std::sqrt(pi)},
        {"e", "", std::exp(1.0)},
        {"sin 1", "", std::sin(1.0)},
    };
  }();
  return b;
}

std::string render(Rational r, const Basis& b, bool leading) {
  const bool negative = r.num() < 0;
  const std::int64_t p = std::llabs(r.num()), q = r.den();
  const std::string sym = b.num, den_sym = b.den;
  std::string num;
  if (sym.empty()) {
    num = std::to_string(p);
  } else {
    num = p == 1 ? sym : std::to_string(p) + (std::isalpha(static_cast<unsigned char>(sym[0])) ? " " : "") + sym;
  }
  std::string den;
  if (q != 1 && !den_sym.empty()) {
    den = "(" + std::to_string(q) + den_sym + ")";
  } else if (q != 1) {
    den = std::to_string(q);
  } else {
    den = den_sym;
  }
  const std::string body = den.empty() ? num : num + "/" + den;
  if (leading) return (negative ? "-" : "") + body;
  return (negative ? " - " : " + ") + body;
}

}  // namespace

std::vector<IntegrandSpec> integrand_terms(const ExprPtr& e, int order) {
  // Monomials with equal exponents are merged so that cancellations vanish.
  std::vector<Term> merged;
  for (const Term& t : Splitter(order).split(e)) {
    auto same = std::find_if(merged.begin(), merged.end(), [&](const Term& m) {
      return !m.has_body && !t.has_body && m.extract == t.extract && m.alpha == t.alpha;
    });
    if (same == merged.end()) {
      merged.push_back(t);
    } else {
      same->coeff += t.coeff;
    }
  }
  std::vector<IntegrandSpec> out;
  for (const Term& t : merged) {
    if (t.coeff == Complex(0.0)) continue;
    PFQSpec spec = t.has_body ? PFQSpec(t.upper, t.lower, t.scale, t.power)
                              : PFQSpec::scalar({}, {}, 0.0, 1, order);
    std::string label = t.has_body ? spec.str() : "1";
    out.push_back({t.alpha, std::move(spec), t.coeff, t.extract, std::move(label), {}});
  }
  return out;
}

std::optional<std::string> recognize_constant(double value, double tol) {
  if (!std::isfinite(value)) return std::nullopt;
  if (value == 0.0) return "0";
  auto close = [&](double v) { return std::abs(v - value) <= tol * std::abs(value); };
  for (const Basis& b : basis()) {
    Rational r;
    if (Rational::approximate(value / b.value, r, 1000, 1e-13) && std::llabs(r.num()) <= 10000 &&
        close(r.to_double() * b.value))
      return render(r, b, true);
  }
  // r0·B0 + r1·B1, constant first so "-2 + π²/4" wins over rarer pairs.
  const auto& bs = basis();
  for (std::size_t i = 0; i < bs.size(); ++i) {
    for (std::size_t j = i + 1; j < bs.size(); ++j) {
      for (int q = 1; q <= 16; ++q) {
        for (int p = -48; p <= 48; ++p) {
          if (p == 0) continue;
          const Rational r1(p, q);
          if (r1.den() != q) continue;
          Rational r0;
          const double rest = value - r1.to_double() * bs[j].value;
          if (Rational::approximate(rest / bs[i].value, r0, 16, 1e-13) && r0.num() != 0 &&
              std::llabs(r0.num()) <= 64 && close(r0.to_double() * bs[i].value + r1.to_double() * bs[j].value))
            return render(r0, bs[i], true) + render(r1, bs[j], false);
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace hypint::cli
