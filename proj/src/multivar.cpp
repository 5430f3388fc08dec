#include "hypint/multivar.hpp"

#include <cmath>

#include "hypint/format.hpp"
#include "hypint/numkernel.hpp"
#include "hypint/oracle.hpp"

namespace hypint {

namespace {

constexpr int kDiagonalCap = 6000;
constexpr int kMinDiagonals = 8;
constexpr int kRatioWindow = 4;

// Grows c_n = ∏(up)_n / (∏(lo)_n · n!^with_factorial) on demand.
class PochhammerRun {
 public:
  PochhammerRun(std::vector<Complex> up, std::vector<Complex> lo, bool factorial)
      : up_(std::move(up)), lo_(std::move(lo)), factorial_(factorial), c_{1.0} {}

  Complex operator[](int n) {
    while (static_cast<int>(c_.size()) <= n) {
      const double m = static_cast<double>(c_.size() - 1);
      Complex r = 1.0;
      for (Complex a : up_) r *= a + m;
      for (Complex c : lo_) r /= c + m;
      if (factorial_) r /= m + 1.0;
      c_.push_back(c_.back() * r);
    }
    return c_[n];
  }

 private:
  std::vector<Complex> up_, lo_;
  bool factorial_;
  std::vector<Complex> c_;
};

std::string list_str(const std::vector<Complex>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + format_complex(v[i]);
  return out;
}

void check_poles(const std::vector<Complex>& lo, const char* where) {
  for (Complex c : lo)
    if (is_nonpositive_integer(c)) throw PoleError(c, where);
}

PFQSpec S(const std::vector<Complex>& up, const std::vector<Complex>& lo) {
  return PFQSpec::scalar(up, lo, 1.0, 1, 0);
}

double F(const std::vector<Complex>& up, const std::vector<Complex>& lo, double z) {
  return eval_series(S(up, lo), z).value().real();
}

}  // namespace

DoubleSeriesSpec DoubleSeriesSpec::appell_f1(Complex a, Complex b1, Complex b2, Complex c, Complex x, Complex y) {
  return {DoubleKind::F1, {a}, {c}, {b1}, {}, {b2}, {}, x, y, 1.0};
}

DoubleSeriesSpec DoubleSeriesSpec::appell_f2(Complex a, Complex b1, Complex b2, Complex c1, Complex c2, Complex x,
                                             Complex y) {
  return {DoubleKind::F2, {a}, {}, {b1}, {c1}, {b2}, {c2}, x, y, 1.0};
}

DoubleSeriesSpec DoubleSeriesSpec::f1_tilde(Complex alpha1, Complex alpha2, Complex gamma1, Complex gamma2,
                                            Complex a1, Complex a2, Complex c, Complex b, Complex x, Complex y) {
  return {DoubleKind::F1Tilde, {alpha1, alpha2}, {gamma1, gamma2}, {a1, a2}, {c}, {b}, {}, x, y, 1.0};
}

std::string DoubleSeriesSpec::str() const {
  const char* name = kind == DoubleKind::F1 ? "F1" : kind == DoubleKind::F2 ? "F2" : "F1~";
  std::string out = prefactor == Complex(1.0) ? "" : format_complex(prefactor) + "*";
  out += std::string(name) + "(" + list_str(outer_upper) + ";" + list_str(outer_lower) + " | " + list_str(x_upper) +
         ";" + list_str(x_lower) + " | " + list_str(y_upper) + ";" + list_str(y_lower) + "; " + format_complex(x) +
         ", " + format_complex(y) + ")";
  return out;
}

Complex eval_double(const DoubleSeriesSpec& spec, double tol) {
  const double ax = std::abs(spec.x), ay = std::abs(spec.y);
  if (spec.kind == DoubleKind::F2) {
    if (!(ax + ay < 1.0)) throw DomainError("|x| + |y| < 1 for F2");
  } else if (!(ax < 1.0 && ay < 1.0)) {
    throw DomainError("|x| < 1 and |y| < 1");
  }
  check_poles(spec.outer_lower, "double series outer lower parameter");
  check_poles(spec.x_lower, "double series x lower parameter");
  check_poles(spec.y_lower, "double series y lower parameter");

  PochhammerRun outer(spec.outer_upper, spec.outer_lower, false);
  PochhammerRun X(spec.x_upper, spec.x_lower, true);
  PochhammerRun Y(spec.y_upper, spec.y_lower, true);
  std::vector<Complex> xp{1.0}, yp{1.0};
  std::vector<double> mags;
  Complex sum = 0.0, comp = 0.0;
  int settled = 0, zeros = 0;
  for (int n = 0; n < kDiagonalCap; ++n) {
    xp.push_back(xp.back() * spec.x);
    yp.push_back(yp.back() * spec.y);
    Complex diag = 0.0;
    for (int j = 0; j <= n; ++j) diag += X[j] * xp[j] * Y[n - j] * yp[n - j];
    diag *= outer[n];
    // Kahan step.
    const Complex t = diag - comp;
    const Complex s = sum + t;
    comp = (s - sum) - t;
    sum = s;
    const double m = std::abs(diag);
    mags.push_back(m);
    zeros = m == 0.0 ? zeros + 1 : 0;
    if (zeros >= 2 * kMinDiagonals) return spec.prefactor * sum;
    if (n < kMinDiagonals) continue;
    double ratio = 0.0;
    for (int i = n - kRatioWindow + 1; i <= n; ++i)
      if (mags[i - 1] > 0.0) ratio = std::max(ratio, mags[i] / mags[i - 1]);
    if (ratio >= 1.0) {
      settled = 0;
      continue;
    }
    const double tail = m * ratio / (1.0 - ratio);
    settled = tail <= tol * std::max(std::abs(sum), 1e-300) ? settled + 1 : 0;
    if (settled >= 2) return spec.prefactor * sum;
  }
  throw ConvergenceError("double series did not settle within " + std::to_string(kDiagonalCap) + " diagonals");
}

DoubleSeriesSpec ialpha_series_rep(double alpha, IalphaVariant variant) {
  if (is_nonpositive_integer(alpha + 1.0))
    throw PoleError(alpha + 1.0, "I_alpha representation lower parameter alpha+1 (use ialpha_series_value)");
  const double third = -1.0 / 3.0;
  DoubleSeriesSpec s = variant == IalphaVariant::Direct
                           ? DoubleSeriesSpec::f1_tilde(1, 0.5, 0.75, 1.25, alpha / 2, (alpha + 1) / 2, alpha + 1,
                                                        alpha / 2, third, third)
                           : DoubleSeriesSpec::f1_tilde(1, 0.5, 0.75, 1.25, 1 + alpha / 2, (alpha + 1) / 2, alpha + 1,
                                                        (alpha - 1) / 2, third, third);
  s.prefactor = std::pow(2.0, -alpha);
  return s;
}

double ialpha_series_value(double alpha, IalphaVariant variant, double tol) {
  if (!is_nonpositive_integer(alpha + 1.0)) return eval_double(ialpha_series_rep(alpha, variant), tol).real();
  auto symmetric = [&](double h) {
    return 0.5 * (eval_double(ialpha_series_rep(alpha + h, variant), tol).real() +
                  eval_double(ialpha_series_rep(alpha - h, variant), tol).real());
  };
  constexpr double h = 1e-3;
  return (4 * symmetric(h / 2) - symmetric(h)) / 3;
}

double ialpha_closed(IalphaCase c, double param) {
  const double third = -1.0 / 3.0;
  const double s2 = std::sqrt(2.0), s6 = std::sqrt(6.0);
  const double at = std::atan(s2), lg = std::log(5 + 2 * s6);
  switch (c) {
    case IalphaCase::I0:
      return 1.0;
    case IalphaCase::I1:
      return 0.5 * F({1, 0.5, 1.5, 1}, {2, 0.75, 1.25}, third);
    case IalphaCase::Iminus1:
      return F({1, 0.5, -0.5}, {0.75, 1.25}, third) + 53.0 / 45;
    case IalphaCase::IminusN: {
      if (param < 1 || param != std::floor(param)) throw DomainError("n is a positive integer");
      const int n = static_cast<int>(param);
      double sum = 0.0, binom = 1.0;
      for (int k = 0; k <= n; ++k) {
        sum += binom * F({-(n + k) / 2.0, 1, 0.5}, {0.75, 1.25}, third);
        binom = binom * (n - k) / (k + 1);
      }
      return sum;
    }
    case IalphaCase::I2:
      return 3 * s2 / 8 * at + s6 / 16 * lg - 0.75 * F({1, 1, 0.5, 2.5}, {0.75, 1.25, 3}, third);
    case IalphaCase::DIdalphaAt0:
      return std::log(0.5) + 2 - s2 / 2 * at - s6 / 4 * lg - 2.0 / 45 * F({1, 1, 1.5, 1.5}, {2, 1.75, 2.25}, third);
    case IalphaCase::Itrue:
      return kPi / (2 * s6);
    case IalphaCase::IalphaTrue:
      if (param == 0.0) return 1 / s2;
      return std::atan(param) / (s2 * param);
  }
  throw DomainError("known I_alpha case");
}

IalphaCase ialpha_case(const std::string& name) {
  for (IalphaCase c : {IalphaCase::I0, IalphaCase::I1, IalphaCase::Iminus1, IalphaCase::IminusN, IalphaCase::I2,
                       IalphaCase::DIdalphaAt0, IalphaCase::Itrue, IalphaCase::IalphaTrue})
    if (name == ialpha_case_name(c)) return c;
  throw UnknownName(name);
}

const char* ialpha_case_name(IalphaCase c) {
  switch (c) {
    case IalphaCase::I0: return "I0";
    case IalphaCase::I1: return "I1";
    case IalphaCase::Iminus1: return "Iminus1";
    case IalphaCase::IminusN: return "Iminus_n";
    case IalphaCase::I2: return "I2";
    case IalphaCase::DIdalphaAt0: return "dIdalpha_at_0";
    case IalphaCase::Itrue: return "Itrue";
    case IalphaCase::IalphaTrue: return "Ialpha_true";
  }
  return "?";
}

double eval_3F2_example_closed(double x) {
  if (!(x > 0.0 && x <= 1.0)) throw DomainError("0 < x <= 1");
  if (x <= 0.3) {
    // The closed form cancels to O(x⁵) here; its Taylor expansion
    // Σ 15(k+1)/((4k+3)(4k+5)) (−x⁴)^k is used instead.
    const double u = -x * x * x * x;
    double sum = 0.0, p = 1.0;
    for (int k = 0; k < 12; ++k, p *= u) sum += 15.0 * (k + 1) / ((4.0 * k + 3) * (4.0 * k + 5)) * p;
    return sum;
  }
  const double s2 = std::sqrt(2.0), x2 = x * x;
  double value = x / 8 + s2 / 64 * (x2 + 1) * std::log((x2 - x * s2 + 1) / (x2 + x * s2 + 1));
  // (x²−1)·arctan(…) → 0 as x → 1.
  if (x < 1.0) value += s2 / 32 * (x2 - 1) * std::atan(x * s2 / (1 - x2));
  return value / (std::pow(x, 5) / 15);
}

double PhiIntegrand::on_halfline(double x) const {
  const double w = 1 + x * x;
  const double phi = 1 + 4 * alpha_phi * alpha_phi * x * x / (w * w);
  return std::pow(w, -1.5) * std::pow(phi + std::pow(phi, root_power), -exponent);
}

double PhiIntegrand::on_unit(double t) const {
  const double phi = 1 + 4 * alpha_phi * alpha_phi * t * t * (1 - t * t);
  return std::pow(phi + std::pow(phi, root_power), -exponent);
}

double ialpha_oracle(double alpha, double tol) {
  const PhiIntegrand f{1 / std::sqrt(3.0), alpha, 0.5};
  return oracle::quad_halfline([f](double x) { return f.on_halfline(x); }, tol).value;
}

double ialpha_oracle_unit(double alpha, double tol) {
  const PhiIntegrand f{1 / std::sqrt(3.0), alpha, 0.5};
  return oracle::quad_finite(oracle::RealFn([f](double t) { return f.on_unit(t); }), 0.0, 1.0, tol).value;
}

double ialpha_true_oracle(double a, double tol) {
  const PhiIntegrand f{a, 0.5, 1.5};
  return oracle::quad_halfline([f](double x) { return f.on_halfline(x); }, tol).value;
}

double ialpha_integrand_direct(double alpha, double t) {
  const double u = 4.0 / 3 * t * t * (1 - t * t);
  return std::pow(2.0, -alpha) * std::pow(1 + u, -alpha / 2) * F({alpha / 2, (alpha + 1) / 2}, {alpha + 1}, -u);
}

double ialpha_integrand_shifted(double alpha, double t) {
  const double u = 4.0 / 3 * t * t * (1 - t * t);
  return std::pow(2.0, -alpha) * std::pow(1 + u, -(alpha - 1) / 2) *
         F({1 + alpha / 2, (alpha + 1) / 2}, {alpha + 1}, -u);
}

}  // namespace hypint
