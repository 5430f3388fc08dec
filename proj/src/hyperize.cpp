#include "hypint/hyperize.hpp"

#include <cmath>
#include <mutex>

#include "hypint/format.hpp"
#include "hypint/numkernel.hpp"
#include "hypint/oracle.hpp"

namespace hypint {

struct CoeffStream::State {
  std::mutex mutex;
  std::vector<Jet> memo;
  Generator next;
};

namespace {

constexpr int kTailWindow = 4;
constexpr int kMinTerms = 8;

void require_order(const CoeffStream& f, const Jet& p) {
  if (p.order() != f.order()) throw OrderMismatch(f.order(), p.order());
}

std::string param_label(const Jet& a, const Jet& c) { return "[" + format_jet(a) + ";" + format_jet(c) + "]"; }

}  // namespace

CoeffStream::CoeffStream(std::string label, double radius, int order, Generator next, ClosedForm closed, int degree)
    : label_(std::move(label)),
      radius_(radius),
      order_(order),
      degree_(degree),
      closed_(std::move(closed)),
      state_(std::make_shared<State>()) {
  state_->next = std::move(next);
}

Jet CoeffStream::coeff(int k) const {
  if (k < 0) throw DomainError("coefficient index >= 0");
  if (degree_ >= 0 && k > degree_) return Jet(order_);
  std::lock_guard<std::mutex> lock(state_->mutex);
  while (static_cast<int>(state_->memo.size()) <= k) state_->memo.push_back(state_->next());
  return state_->memo[k];
}

Jet CoeffStream::closed_form(Complex x) const {
  if (!closed_) throw DomainError("stream " + label_ + " has a closed form");
  return closed_(x);
}

Jet CoeffStream::eval(Complex x, double tol) const {
  const double r = std::abs(x);
  if (degree_ < 0 && !(r < radius_)) throw DivergenceError("|x| = " + format_real(r) + " outside the radius of " + label_);
  Jet sum(order_), comp(order_);
  auto add = [&](const Jet& t) {
    for (int i = 0; i <= order_; ++i) {
      const Complex s = sum[i] + t[i];
      const Complex big = std::abs(sum[i]) >= std::abs(t[i]) ? sum[i] : t[i];
      const Complex small = std::abs(sum[i]) >= std::abs(t[i]) ? t[i] : sum[i];
      comp[i] += (big - s) + small;
      sum[i] = s;
    }
  };
  if (degree_ >= 0) {
    Complex xk = 1.0;
    for (int k = 0; k <= degree_; ++k, xk *= x) add(coeff(k) * xk);
    return sum + comp;
  }
  const double geometric = std::isinf(radius_) ? 1.0 : 1.0 / (1.0 - r / radius_);
  std::vector<double> recent;
  bool prev_ok = false;
  Complex xk = 1.0;
  for (std::size_t k = 0; k < kTermCap; ++k, xk *= x) {
    const Jet t = coeff(static_cast<int>(k)) * xk;
    add(t);
    recent.push_back(t.norm());
    if (recent.size() > kTailWindow) recent.erase(recent.begin());
    if (static_cast<int>(k) < kMinTerms) continue;
    double peak = 0.0;
    for (double v : recent) peak = std::max(peak, v);
    const bool decaying = recent.back() <= recent.front() || recent.front() == 0.0;
    const bool ok = decaying && peak * geometric <= tol * std::max((sum + comp).norm(), 1e-300);
    if (ok && prev_ok) return sum + comp;
    prev_ok = ok;
  }
  throw ConvergenceError("stream " + label_ + " did not converge within " + std::to_string(kTermCap) + " terms");
}

CoeffStream CoeffStream::exp(int order) {
  auto gen = [order, k = 0, t = Jet(1.0, order)]() mutable {
    Jet out = t;
    ++k;
    t /= static_cast<double>(k);
    return out;
  };
  auto closed = [order](Complex x) { return Jet(std::exp(x), order); };
  return CoeffStream("exp", kInfiniteRadius, order, gen, closed);
}

CoeffStream CoeffStream::binomial(const Jet& b) {
  const int order = b.order();
  auto gen = [b, k = 0, t = Jet(1.0, order)]() mutable {
    Jet out = t;
    t = jet_mul(t, b + static_cast<double>(k)) / static_cast<double>(k + 1);
    ++k;
    return out;
  };
  auto closed = [b, order](Complex x) { return jet_pow(Jet(1.0 - x, order), -b); };
  return CoeffStream("(1-x)^-(" + format_jet(b) + ")", 1.0, order, gen, closed);
}

CoeffStream CoeffStream::constant(const Jet& c) {
  auto gen = [c]() { return c; };
  auto closed = [c](Complex) { return c; };
  return CoeffStream(format_jet(c), kInfiniteRadius, c.order(), gen, closed, 0);
}

CoeffStream CoeffStream::arctan(int order) {
  auto gen = [order, k = 0]() mutable {
    const int j = k++;
    if (j % 2 == 0) return Jet(order);
    return Jet(((j - 1) / 2 % 2 == 0 ? 1.0 : -1.0) / j, order);
  };
  auto closed = [order](Complex x) { return Jet(std::atan(x), order); };
  return CoeffStream("arctan", 1.0, order, gen, closed);
}

CoeffStream CoeffStream::arctan_derivative(int order) {
  auto gen = [order, k = 0]() mutable {
    const int j = k++;
    if (j % 2 == 1) return Jet(order);
    return Jet(j / 2 % 2 == 0 ? 1.0 : -1.0, order);
  };
  auto closed = [order](Complex x) { return Jet(1.0 / (1.0 + x * x), order); };
  return CoeffStream("1/(1+x^2)", 1.0, order, gen, closed);
}

CoeffStream CoeffStream::from_pfq(const PFQSpec& spec) {
  if (!(spec.power() == Rational(1))) throw DomainError("pFq stream requires argument power 1");
  const ConvergenceClass cls = classify(spec);
  const Complex gamma = spec.scale();
  double radius = kInfiniteRadius;
  if (cls.kind == SeriesKind::UnitDisk) radius = gamma == Complex(0.0) ? kInfiniteRadius : 1.0 / std::abs(gamma);
  int degree = -1;
  const int term = terminating_index(spec);
  if (term >= 0) degree = static_cast<int>(-std::lround(spec.upper()[term].value().real()));
  auto gen = [spec, gamma, k = 0, t = Jet(1.0, spec.order())]() mutable {
    Jet out = t;
    const double kk = static_cast<double>(k);
    Jet num(gamma / (kk + 1.0), spec.order());
    for (const Jet& a : spec.upper()) num = jet_mul(num, a + kk);
    for (const Jet& c : spec.lower()) num = jet_mul(num, reciprocal(c + kk));
    t = jet_mul(t, num);
    ++k;
    return out;
  };
  auto closed = [spec](Complex x) { return hypint::eval(spec, x); };
  return CoeffStream(spec.str(), radius, spec.order(), gen, closed, degree);
}

CoeffStream CoeffStream::polynomial(const std::vector<Jet>& coeffs) {
  if (coeffs.empty()) throw DomainError("polynomial has at least one coefficient");
  const int order = coeffs.front().order();
  for (const Jet& c : coeffs)
    if (c.order() != order) throw OrderMismatch(order, c.order());
  auto gen = [coeffs, k = std::size_t{0}]() mutable { return coeffs[k++]; };
  auto closed = [coeffs, order](Complex x) {
    Jet acc(order);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
  };
  return CoeffStream("poly", kInfiniteRadius, order, gen, closed, static_cast<int>(coeffs.size()) - 1);
}

CoeffStream hypize(const CoeffStream& f, const Jet& a, const Jet& c) {
  require_order(f, a);
  require_order(f, c);
  if (is_nonpositive_integer(c.value())) throw PoleError(c.value(), "hypergeometrization lower parameter");
  int degree = f.degree();
  if (a.is_scalar() && is_nonpositive_integer(a.value())) {
    const int n = static_cast<int>(-std::lround(a.value().real()));
    degree = degree < 0 ? n : std::min(degree, n);
  }
  auto gen = [f, a, c, k = 0, ratio = Jet(1.0, f.order())]() mutable {
    Jet out = jet_mul(f.coeff(k), ratio);
    const double kk = static_cast<double>(k);
    ratio = jet_mul(ratio, jet_mul(a + kk, reciprocal(c + kk)));
    ++k;
    return out;
  };
  const double radius = degree >= 0 ? kInfiniteRadius : f.radius();
  return CoeffStream(f.label() + param_label(a, c), radius, f.order(), gen, {}, degree);
}

CoeffStream undo(const CoeffStream& f, const Jet& a, const Jet& c) { return hypize(f, c, a); }

SplitParams power_split(const Jet& a, const Jet& c, int n) {
  if (n <= 0) throw DomainError("split factor n >= 1");
  SplitParams out{{}, {}, 1.0};
  for (int j = 0; j < n; ++j) {
    out.upper.push_back((a + static_cast<double>(j)) / static_cast<double>(n));
    out.lower.push_back((c + static_cast<double>(j)) / static_cast<double>(n));
  }
  return out;
}

CoeffStream hypize_split(const CoeffStream& g, const Jet& a, const Jet& c, int n) {
  const SplitParams split = power_split(a, c, n);
  CoeffStream h = g;
  for (int j = 0; j < n; ++j) h = hypize(h, split.upper[j], split.lower[j]);
  return h;
}

CoeffStream taylor_remainder(const CoeffStream& f, int n) {
  if (n < 0) throw DomainError("remainder index n >= 0");
  if (n == 0) return f;
  // f^(n) has coefficients f_{j+n}·(j+n)!/j!.
  auto gen = [f, n, j = 0]() mutable {
    double falling = 1.0;
    for (int i = 1; i <= n; ++i) falling *= static_cast<double>(j + i);
    Jet out = f.coeff(j + n) * falling;
    ++j;
    return out;
  };
  const int degree = f.degree() < 0 ? -1 : std::max(f.degree() - n, 0);
  CoeffStream derivative(f.label() + "^(" + std::to_string(n) + ")", f.radius(), f.order(), gen, {}, degree);
  return hypize(derivative, Jet(1.0, f.order()), Jet(static_cast<double>(n + 1), f.order()));
}

Jet DerivativeForm::eval(Complex x, double tol) const {
  const Complex outer = prefactor * rational_power(x, shift);
  return body.eval(rational_power(x, inner), tol) * outer;
}

DerivativeForm derivative_rule(Rational beta, Rational alpha, const CoeffStream& f) {
  if (beta.num() == 0) throw DomainError("beta != 0");
  if (alpha.num() == 0) throw DomainError("alpha != 0");
  const double q = (beta / alpha).to_double();
  const int K = f.order();
  return {beta.to_double(), beta - Rational(1), alpha, hypize(f, Jet(1.0 + q, K), Jet(q, K))};
}

DerivativeForm derivative_rule_repeated(Rational beta, int n, const CoeffStream& f) {
  if (n < 0) throw DomainError("derivative count n >= 0");
  if (n == 0) return {1.0, beta, Rational(1), f};
  const double b = beta.to_double();
  double binom = 1.0;
  for (int i = 0; i < n; ++i) binom *= (b - i) / (i + 1);
  const int K = f.order();
  return {binom, beta - Rational(n), Rational(1), hypize(f, Jet(1.0 + b, K), Jet(1.0 + b - n, K))};
}

EulerCheck euler_rep_check(const CoeffStream& f, Complex a, Complex c, Complex x, EulerRep rep, double alpha) {
  const int K = f.order();
  auto f_at = [&f](Complex z) { return f.has_closed_form() ? f.closed_form(z).value() : f.eval(z).value(); };
  std::function<Complex(double, double, double)> integrand;
  Complex factor;
  CoeffStream series = f;
  Complex arg = x;
  if (rep == EulerRep::Beta) {
    if (!(c.real() > a.real() && a.real() > 0.0)) throw DomainError("Re(c) > Re(a) > 0");
    if (!(std::abs(x) < f.radius())) throw DomainError("|x| < radius of " + f.label());
    integrand = [=](double s, double, double to_b) {
      return std::exp((a - 1.0) * std::log(s) + (c - a - 1.0) * std::log(to_b)) * f_at(s * x);
    };
    factor = cgamma(c - a) * cgamma(a) * crgamma(c);
    series = hypize(f, Jet(a, K), Jet(c, K));
  } else {
    if (!(a.real() > 0.0 && c.real() > 0.0 && alpha > 0.0)) throw DomainError("Re(a) > 0, Re(c) > 0, alpha > 0");
    if (!(std::abs(x) / 4.0 < f.radius())) throw DomainError("|x|/4 < radius of " + f.label());
    integrand = [=](double s, double, double to_b) {
      const double u = std::pow(s, alpha);
      const double one_minus_u = to_b < 0.5 ? -std::expm1(alpha * std::log1p(-to_b)) : 1.0 - u;
      return std::exp((a - 1.0) * std::log(s) + (c - 1.0) * std::log(one_minus_u)) * f_at(x * u * one_minus_u);
    };
    const Complex q = a / alpha;
    factor = cgamma(q) * cgamma(c) * crgamma(c + q) / alpha;
    series = hypize(hypize(f, Jet(q, K), Jet(c / 2.0 + q / 2.0, K)), Jet(c, K), Jet((1.0 + c) / 2.0 + q / 2.0, K));
    arg = x / 4.0;
  }
  const auto re = oracle::quad_finite(
      oracle::EndpointFn([&](double s, double fa, double tb) { return integrand(s, fa, tb).real(); }), 0.0, 1.0,
      1e-12);
  const auto im = oracle::quad_finite(
      oracle::EndpointFn([&](double s, double fa, double tb) { return integrand(s, fa, tb).imag(); }), 0.0, 1.0,
      1e-12);
  EulerCheck out;
  out.lhs = {re.value, im.value};
  out.rhs = factor * series.eval(arg, 1e-14).value();
  out.residual = std::abs(out.lhs - out.rhs);
  return out;
}

}  // namespace hypint
