#include "hypint/pfq.hpp"

#include <cmath>
#include <deque>
#include <sstream>

#include "hypint/format.hpp"
#include "hypint/numkernel.hpp"
#include "hypint/wynn.hpp"

namespace hypint {

namespace {

constexpr double kPfaffRadius = 0.9;
constexpr std::size_t kWynnWindow = 48;
constexpr std::size_t kBlock = 64;
constexpr int kBlockDoublings = 10;  // 64·2^10 = 65536 terms

// Neumaier-compensated running sum of jets.
class JetAccumulator {
 public:
  explicit JetAccumulator(int order) : sum_(order), comp_(order) {}
  void add(const Jet& t) {
    for (int k = 0; k <= t.order(); ++k) {
      sum_[k] = {add_part(sum_[k].real(), t[k].real(), re_comp(k)),
                 add_part(sum_[k].imag(), t[k].imag(), im_comp(k))};
    }
  }
  Jet value() const { return sum_ + comp_; }

 private:
  static double add_part(double s, double x, double& c) {
    const double t = s + x;
    c += std::abs(s) >= std::abs(x) ? (s - t) + x : (x - t) + s;
    return t;
  }
  double& re_comp(int k) { return reinterpret_cast<double(&)[2]>(comp_[k])[0]; }
  double& im_comp(int k) { return reinterpret_cast<double(&)[2]>(comp_[k])[1]; }
  Jet sum_, comp_;
};

// Successive terms t_k of Σ ∏(a)_k/∏(c)_k z^k/k!.
class TermStepper {
 public:
  TermStepper(const PFQSpec& spec, Complex z) : spec_(spec), z_(z), term_(1.0, spec.order()) {}
  const Jet& term() const { return term_; }
  std::size_t index() const { return k_; }
  void advance() {
    const double kk = static_cast<double>(k_);
    Jet num(z_ / (kk + 1.0), spec_.order());
    for (const Jet& a : spec_.upper()) num = jet_mul(num, a + kk);
    if (!spec_.lower().empty()) {
      Jet den = spec_.lower().front() + kk;
      for (std::size_t j = 1; j < spec_.lower().size(); ++j) den = jet_mul(den, spec_.lower()[j] + kk);
      num = den.is_scalar() ? num / den.value() : jet_mul(num, reciprocal(den));
    }
    term_ = jet_mul(term_, num);
    ++k_;
  }

 private:
  const PFQSpec& spec_;
  Complex z_;
  Jet term_;
  std::size_t k_ = 0;
};

bool jets_match(const Jet& a, const Jet& b) {
  if (a.order() != b.order()) return false;
  return distance(a, b) <= 1e-14 * std::max(1.0, std::max(a.norm(), b.norm()));
}

bool is_terminating(const Jet& a) { return a.is_scalar() && is_nonpositive_integer(a.value()); }

// Direct summation. rho_limit is the asymptotic term ratio (|z| on the unit
// disk, 0 for entire series); the tail after term k+1 is bounded by
// |t_{k+1}| ρ/(1−ρ) with ρ = max(current ratio, rho_limit).
Jet sum_direct(const PFQSpec& spec, Complex z, const EvalOptions& opts, double rho_limit) {
  TermStepper step(spec, z);
  JetAccumulator acc(spec.order());
  acc.add(step.term());
  double prev_ratio = std::numeric_limits<double>::infinity();
  bool prev_ok = false;
  while (step.index() < opts.term_cap) {
    const double before = step.term().norm();
    step.advance();
    const Jet& t = step.term();
    const double now = t.norm();
    if (now == 0.0) return acc.value();
    acc.add(t);
    const double ratio = now / before;
    const double rho = std::max(ratio, rho_limit);
    const bool settled = rho_limit > 0.0 || ratio <= prev_ratio * (1.0 + 1e-12);
    bool ok = false;
    if (rho < 1.0 && settled) {
      const double bound = now * rho / (1.0 - rho);
      ok = bound <= opts.tol * std::max(acc.value().norm(), 1e-300);
    }
    if (ok && prev_ok) return acc.value();
    prev_ok = ok;
    prev_ratio = ratio;
  }
  throw ConvergenceError("series did not converge within " + std::to_string(opts.term_cap) + " terms");
}

// |z| in [0.9, 1], z ≠ 1: Wynn-ε over a sliding window of consecutive partial sums.
Jet sum_near_circle(const PFQSpec& spec, Complex z, const EvalOptions& opts) {
  TermStepper step(spec, z);
  JetAccumulator acc(spec.order());
  acc.add(step.term());
  std::deque<Jet> window{acc.value()};
  std::size_t checkpoint = 32;
  bool have_prev = false;
  Jet prev(spec.order());
  const double rho_limit = std::abs(z);
  bool prev_ok = false;
  while (step.index() < opts.term_cap) {
    const double before = step.term().norm();
    step.advance();
    const Jet& t = step.term();
    const double now = t.norm();
    if (now == 0.0) return acc.value();
    acc.add(t);
    window.push_back(acc.value());
    if (window.size() > kWynnWindow) window.pop_front();
    const double rho = std::max(now / before, rho_limit);
    const bool ok = rho < 1.0 && now * rho / (1.0 - rho) <= opts.tol * std::max(acc.value().norm(), 1e-300);
    if (ok && prev_ok) return acc.value();
    prev_ok = ok;
    if (step.index() == checkpoint) {
      const WynnJetEstimate est = wynn_epsilon(std::vector<Jet>(window.begin(), window.end()));
      const double scale = std::max(est.value.norm(), 1e-300);
      if (have_prev && distance(est.value, prev) <= opts.tol * scale && est.error <= opts.tol * scale)
        return est.value;
      prev = est.value;
      have_prev = true;
      checkpoint *= 2;
    }
  }
  throw ConvergenceError("accelerated summation did not settle within " + std::to_string(opts.term_cap) +
                         " terms");
}

Jet gauss_sum(const Jet& a, const Jet& b, const Jet& c) {
  return jet_mul(jet_mul(gamma_jet(c), gamma_jet(c - a - b)), jet_mul(rgamma_jet(c - a), rgamma_jet(c - b)));
}

// Partial sums at 64·2^j terms, then Wynn-ε across the blocks.
Jet sum_at_one_blocks(const PFQSpec& spec, const EvalOptions& opts) {
  TermStepper step(spec, 1.0);
  JetAccumulator acc(spec.order());
  acc.add(step.term());
  std::vector<Jet> sums;
  std::size_t target = kBlock;
  Jet prev(spec.order());
  double last_gap = std::numeric_limits<double>::infinity();
  for (int j = 0; j <= kBlockDoublings; ++j, target *= 2) {
    while (step.index() + 1 < target) {
      step.advance();
      acc.add(step.term());
    }
    sums.push_back(acc.value());
    if (sums.size() < 3) continue;
    const WynnJetEstimate est = wynn_epsilon(sums);
    const double scale = std::max(est.value.norm(), 1e-300);
    if (sums.size() > 3) {
      last_gap = distance(est.value, prev);
      if (last_gap <= opts.tol * scale) return est.value;
    }
    prev = est.value;
  }
  std::ostringstream os;
  os << "value at 1 did not stabilize (last relative gap " << last_gap / std::max(prev.norm(), 1e-300) << ")";
  throw ConvergenceError(os.str());
}

}  // namespace

Complex rational_power(Complex x, Rational r) {
  if (r.is_integer()) {
    const auto n = r.num();
    Complex base = n < 0 ? 1.0 / x : x;
    Complex out = 1.0;
    for (std::int64_t m = n < 0 ? -n : n; m > 0; m >>= 1) {
      if (m & 1) out *= base;
      base *= base;
    }
    return out;
  }
  if (x.imag() == 0.0 && x.real() >= 0.0) return std::pow(x.real(), r.to_double());
  return std::pow(x, r.to_double());
}

PFQSpec::PFQSpec(std::vector<Jet> upper, std::vector<Jet> lower, Complex scale, Rational power)
    : upper_(std::move(upper)), lower_(std::move(lower)), scale_(scale), power_(power), order_(kDefaultJetOrder) {
  if (upper_.size() > lower_.size() + 1) throw DomainError("p <= q+1 (got " + std::to_string(upper_.size()) + "F" + std::to_string(lower_.size()) + ")");
  if (power_.num() == 0) throw DomainError("argument power beta must be nonzero");
  if (!upper_.empty()) order_ = upper_.front().order();
  else if (!lower_.empty()) order_ = lower_.front().order();
  sigma_ = Jet(order_);
  for (const Jet& a : upper_) {
    if (a.order() != order_) throw OrderMismatch(order_, a.order());
    sigma_ -= a;
  }
  for (const Jet& c : lower_) {
    if (c.order() != order_) throw OrderMismatch(order_, c.order());
    if (is_nonpositive_integer(c.value()))
      throw DomainError("lower parameter " + format_jet(c) + " has a non-positive integer base value");
    sigma_ += c;
  }
}

PFQSpec PFQSpec::scalar(const std::vector<Complex>& upper, const std::vector<Complex>& lower, Complex scale,
                        Rational power, int order) {
  std::vector<Jet> u, l;
  for (Complex a : upper) u.emplace_back(a, order);
  for (Complex c : lower) l.emplace_back(c, order);
  if (u.empty() && l.empty()) {
    PFQSpec s(u, l, scale, power);
    return s.with_order(order);
  }
  return PFQSpec(std::move(u), std::move(l), scale, power);
}

Complex PFQSpec::argument(Complex x) const { return scale_ * rational_power(x, power_); }

PFQSpec PFQSpec::with_argument(Complex scale, Rational power) const {
  PFQSpec s = *this;
  if (power.num() == 0) throw DomainError("argument power beta must be nonzero");
  s.scale_ = scale;
  s.power_ = power;
  return s;
}

PFQSpec PFQSpec::appended(const std::vector<Jet>& upper, const std::vector<Jet>& lower) const {
  std::vector<Jet> u = upper_, l = lower_;
  u.insert(u.end(), upper.begin(), upper.end());
  l.insert(l.end(), lower.begin(), lower.end());
  PFQSpec s(std::move(u), std::move(l), scale_, power_);
  return s.order_ == order_ ? s : s.with_order(order_);
}

PFQSpec PFQSpec::cancelled() const {
  std::vector<Jet> u = upper_, l;
  for (const Jet& c : lower_) {
    bool matched = false;
    for (auto it = u.begin(); it != u.end(); ++it) {
      if (jets_match(*it, c)) {
        u.erase(it);
        matched = true;
        break;
      }
    }
    if (!matched) l.push_back(c);
  }
  PFQSpec s(std::move(u), std::move(l), scale_, power_);
  return s.order_ == order_ ? s : s.with_order(order_);
}

PFQSpec PFQSpec::with_order(int order) const {
  PFQSpec s = *this;
  for (Jet& a : s.upper_) a = a.with_order(order);
  for (Jet& c : s.lower_) c = c.with_order(order);
  s.sigma_ = sigma_.with_order(order);
  s.order_ = order;
  return s;
}

std::string PFQSpec::str(const std::string& var) const {
  std::ostringstream os;
  os << p() << "F" << q() << "(";
  for (std::size_t i = 0; i < upper_.size(); ++i) os << (i ? "," : "") << format_jet(upper_[i]);
  os << ";";
  for (std::size_t j = 0; j < lower_.size(); ++j) os << (j ? "," : "") << format_jet(lower_[j]);
  os << ";";
  std::string pw = var;
  if (!(power_ == Rational(1))) {
    pw += power_.is_integer() && power_.num() > 0 ? "^" + power_.str() : "^(" + power_.str() + ")";
  }
  if (scale_ == Complex(1.0)) os << pw;
  else if (scale_ == Complex(-1.0)) os << "-" << pw;
  else if (scale_.imag() == 0.0) os << format_real(scale_.real()) << "*" << pw;
  else os << "(" << format_complex(scale_) << ")*" << pw;
  os << ")";
  return os.str();
}

const char* kind_name(SeriesKind kind) {
  switch (kind) {
    case SeriesKind::Entire: return "entire";
    case SeriesKind::UnitDisk: return "unit-disk";
    case SeriesKind::Polynomial: return "polynomial";
  }
  return "?";
}

int terminating_index(const PFQSpec& spec) {
  int best = -1;
  for (std::size_t i = 0; i < spec.p(); ++i) {
    if (!is_terminating(spec.upper()[i])) continue;
    if (best < 0 || spec.upper()[i].value().real() > spec.upper()[best].value().real()) best = static_cast<int>(i);
  }
  return best;
}

ConvergenceClass classify(const PFQSpec& spec) {
  const Complex sigma = spec.sigma().value();
  if (terminating_index(spec) >= 0) return {SeriesKind::Polynomial, sigma};
  if (spec.p() == spec.q() + 1) return {SeriesKind::UnitDisk, sigma};
  return {SeriesKind::Entire, sigma};
}

Jet eval(const PFQSpec& spec, Complex x, double tol) {
  EvalOptions opts;
  opts.tol = tol;
  return eval(spec, x, opts);
}

Jet eval(const PFQSpec& spec, Complex x, const EvalOptions& opts) {
  return eval_series(spec, spec.argument(x), opts);
}

Jet eval_series(const PFQSpec& spec, Complex z, const EvalOptions& opts) {
  if (z == Complex(0.0)) return value_at_zero(spec);
  const ConvergenceClass cls = classify(spec);
  if (cls.kind == SeriesKind::Polynomial) return sum_direct(spec, z, opts, 0.0);
  if (cls.kind == SeriesKind::Entire) return sum_direct(spec, z, opts, 0.0);
  const double r = std::abs(z);
  if (r < kPfaffRadius) return sum_direct(spec, z, opts, r);
  if (spec.p() == 2 && opts.allow_pfaff && z.real() < 0.5) {
    // 2F1(a,b;c;z) = (1−z)^{−b} 2F1(c−a,b;c;z/(z−1)); |z/(z−1)| < 1 for Re z < 1/2.
    const Jet& a = spec.upper()[0];
    const Jet& b = spec.upper()[1];
    const Jet& c = spec.lower()[0];
    const PFQSpec mapped({c - a, b}, {c});
    const Jet pre = jet_pow(Jet(1.0 - z, spec.order()), -b);
    return jet_mul(pre, eval_series(mapped, z / (z - 1.0), opts));
  }
  if (std::abs(z - 1.0) <= 1e-15) return eval_at_one(spec, opts);
  if (r > 1.0 + 1e-13)
    throw DivergenceError("argument " + format_complex(z) + " outside the unit disk of a " + std::to_string(spec.p()) +
                          "F" + std::to_string(spec.q()) + " series");
  if (r >= 1.0 - 1e-13 && cls.sigma.real() <= -1.0)
    throw DivergenceError("series diverges on the unit circle when Re(sigma) <= -1");
  return sum_near_circle(spec, z, opts);
}

Jet series_coefficient(const PFQSpec& spec, int k) {
  TermStepper step(spec, 1.0);
  while (static_cast<int>(step.index()) < k) step.advance();
  return step.term();
}

Jet value_at_zero(const PFQSpec& spec) { return Jet(1.0, spec.order()); }

AsymptoticTerm limit_at_minus_infinity(const PFQSpec& spec) {
  const int K = spec.order();
  const auto& up = spec.upper();
  const auto& lo = spec.lower();
  std::vector<int> term_idx;
  for (std::size_t i = 0; i < up.size(); ++i)
    if (is_terminating(up[i])) term_idx.push_back(static_cast<int>(i));
  if (term_idx.size() > 1) throw DomainError("exactly one non-positive-integer upper parameter");
  if (term_idx.size() == 1) {
    const int m = term_idx.front();
    const int n = static_cast<int>(-std::lround(up[m].value().real()));
    Jet coef(1.0, K);
    for (std::size_t i = 0; i < up.size(); ++i)
      if (static_cast<int>(i) != m) coef = jet_mul(coef, pochhammer(up[i], n));
    for (const Jet& c : lo) coef = coef / pochhammer(c, n);
    return {Jet(-static_cast<double>(n), K), coef};
  }
  if (up.empty()) throw DomainError("p >= q-1 (no upper parameters)");
  if (up.size() + 1 < lo.size()) throw DomainError("p >= q-1");
  for (std::size_t i = 0; i < up.size(); ++i) {
    for (std::size_t j = i + 1; j < up.size(); ++j) {
      const Complex d = up[i].value() - up[j].value();
      if (std::abs(d.imag()) <= 1e-12 && std::abs(d.real() - std::round(d.real())) <= 1e-12)
        throw DomainError("upper parameters pairwise non-congruent mod Z (" + format_jet(up[i]) + ", " +
                          format_jet(up[j]) + ")");
    }
  }
  std::size_t m = 0;
  for (std::size_t i = 1; i < up.size(); ++i)
    if (up[i].value().real() < up[m].value().real()) m = i;
  for (std::size_t i = 0; i < up.size(); ++i) {
    if (i != m && std::abs(up[i].value().real() - up[m].value().real()) <= 1e-12)
      throw DomainError("unique minimal upper parameter (tie in real part)");
  }
  const Jet& alpha = up[m];
  if (up.size() + 1 == lo.size() && !(alpha.value().real() < spec.sigma().value().real() - 0.5))
    throw DomainError("min(a) < Re(sigma) - 1/2 for p = q-1");
  Jet coef(1.0, K);
  for (std::size_t i = 0; i < up.size(); ++i) {
    if (i == m) continue;
    coef = jet_mul(coef, jet_mul(gamma_jet(up[i] - alpha), rgamma_jet(up[i])));
  }
  for (const Jet& c : lo) coef = jet_mul(coef, jet_mul(gamma_jet(c), rgamma_jet(c - alpha)));
  return {alpha, coef};
}

Jet eval_at_one(const PFQSpec& spec, double tol) {
  EvalOptions opts;
  opts.tol = tol;
  return eval_at_one(spec, opts);
}

Jet eval_at_one(const PFQSpec& spec, const EvalOptions& opts) {
  const ConvergenceClass cls = classify(spec);
  if (cls.kind != SeriesKind::UnitDisk) return sum_direct(spec, 1.0, opts, 0.0);
  if (!(cls.sigma.real() > 0.0)) throw DivergenceError("divergent at 1: Re(sigma) <= 0");
  if (spec.p() == 2 && opts.use_gauss) return gauss_sum(spec.upper()[0], spec.upper()[1], spec.lower()[0]);
  return sum_at_one_blocks(spec, opts);
}

}  // namespace hypint
