#include "hypint/jet.hpp"

#include <algorithm>
#include <cmath>

namespace hypint {

namespace {

void check_order(int order) {
  if (order < 0 || order > kMaxJetOrder)
    throw DomainError("jet order must lie in [0, " + std::to_string(kMaxJetOrder) + "]");
}

void same_order(const Jet& a, const Jet& b) {
  if (a.order() != b.order()) throw OrderMismatch(a.order(), b.order());
}

// Σ_m w[m] δ^m for nilpotent δ (δ[0] == 0).
Jet series_in_nilpotent(const Jet& delta, const Complex* w) {
  const int K = delta.order();
  Jet out(w[0], K);
  Jet power(1.0, K);
  for (int m = 1; m <= K; ++m) {
    power = jet_mul(power, delta);
    for (int i = m; i <= K; ++i) out[i] += w[m] * power[i];
  }
  return out;
}

}  // namespace

Jet::Jet(int order) : order_(order) { check_order(order); }

Jet::Jet(Complex value, int order) : order_(order) {
  check_order(order);
  c_[0] = value;
}

Jet::Jet(std::initializer_list<Complex> coeffs, int order) : order_(order) {
  check_order(order);
  int k = 0;
  for (Complex c : coeffs) {
    if (k > order) break;
    c_[k++] = c;
  }
}

Jet Jet::variable(Complex value, Complex slope, int order) {
  Jet j(value, order);
  if (order >= 1) j.c_[1] = slope;
  return j;
}

bool Jet::is_scalar() const {
  for (int k = 1; k <= order_; ++k)
    if (c_[k] != Complex(0.0)) return false;
  return true;
}

double Jet::norm() const {
  double m = 0.0;
  for (int k = 0; k <= order_; ++k) m = std::max(m, std::abs(c_[k]));
  return m;
}

Jet Jet::nilpotent() const {
  Jet j = *this;
  j.c_[0] = 0.0;
  return j;
}

Jet Jet::with_order(int order) const {
  Jet j(order);
  for (int k = 0; k <= std::min(order, order_); ++k) j.c_[k] = c_[k];
  return j;
}

Jet& Jet::operator+=(const Jet& b) {
  same_order(*this, b);
  for (int k = 0; k <= order_; ++k) c_[k] += b.c_[k];
  return *this;
}

Jet& Jet::operator-=(const Jet& b) {
  same_order(*this, b);
  for (int k = 0; k <= order_; ++k) c_[k] -= b.c_[k];
  return *this;
}

Jet& Jet::operator*=(const Jet& b) { return *this = jet_mul(*this, b); }
Jet& Jet::operator/=(const Jet& b) { return *this = jet_mul(*this, reciprocal(b)); }

Jet& Jet::operator*=(Complex b) {
  for (int k = 0; k <= order_; ++k) c_[k] *= b;
  return *this;
}

Jet operator-(const Jet& a) {
  Jet r = a;
  for (int k = 0; k <= a.order(); ++k) r[k] = -a[k];
  return r;
}

Jet operator/(Complex a, const Jet& b) { return reciprocal(b) * a; }

Jet jet_mul(const Jet& a, const Jet& b) {
  same_order(a, b);
  const int K = a.order();
  Jet r(K);
  for (int m = 0; m <= K; ++m) {
    Complex s = 0.0;
    for (int i = 0; i <= m; ++i) s += a[i] * b[m - i];
    r[m] = s;
  }
  return r;
}

Jet reciprocal(const Jet& a) {
  if (a.value() == Complex(0.0)) throw DomainError("reciprocal of a jet with zero base value");
  const int K = a.order();
  Jet r(K);
  const Complex inv = 1.0 / a[0];
  r[0] = inv;
  for (int m = 1; m <= K; ++m) {
    Complex s = 0.0;
    for (int i = 1; i <= m; ++i) s += a[i] * r[m - i];
    r[m] = -s * inv;
  }
  return r;
}

Jet jet_log(const Jet& a) {
  const Complex a0 = a.value();
  if (a0.imag() == 0.0 && a0.real() <= 0.0)
    throw DomainError("jet_log: base value on the branch cut (-inf, 0]");
  const int K = a.order();
  const Jet u = a.nilpotent() / a0;
  std::array<Complex, kMaxJetOrder + 1> w{};
  w[0] = std::log(a0);
  for (int m = 1; m <= K; ++m) w[m] = (m % 2 ? 1.0 : -1.0) / static_cast<double>(m);
  return series_in_nilpotent(u, w.data());
}

Jet jet_exp(const Jet& a) {
  const int K = a.order();
  std::array<Complex, kMaxJetOrder + 1> w{};
  double fact = 1.0;
  for (int m = 0; m <= K; ++m) {
    if (m) fact *= m;
    w[m] = 1.0 / fact;
  }
  return series_in_nilpotent(a.nilpotent(), w.data()) * std::exp(a.value());
}

Jet jet_pow(const Jet& a, Complex p) {
  const Complex a0 = a.value();
  if (a0 == Complex(0.0)) throw DomainError("jet_pow: base value is zero");
  const int K = a.order();
  // a^p = a0^p (1+u)^p with binomial weights (p choose m).
  const Jet u = a.nilpotent() / a0;
  std::array<Complex, kMaxJetOrder + 1> w{};
  w[0] = 1.0;
  for (int m = 1; m <= K; ++m) w[m] = w[m - 1] * (p - static_cast<double>(m - 1)) / static_cast<double>(m);
  const Complex head = (a0.imag() == 0.0 && a0.real() > 0.0 && p.imag() == 0.0)
                           ? Complex(std::pow(a0.real(), p.real()))
                           : std::pow(a0, p);
  return series_in_nilpotent(u, w.data()) * head;
}

Jet jet_pow(const Jet& a, const Jet& p) {
  if (p.is_scalar()) return jet_pow(a, p.value());
  return jet_exp(jet_mul(p, jet_log(a)));
}

Jet jet_sqrt(const Jet& a) { return jet_pow(a, 0.5); }

Jet compose(const Jet& a, const Complex* derivs) {
  const int K = a.order();
  std::array<Complex, kMaxJetOrder + 1> w{};
  double fact = 1.0;
  for (int m = 0; m <= K; ++m) {
    if (m) fact *= m;
    w[m] = derivs[m] / fact;
  }
  return series_in_nilpotent(a.nilpotent(), w.data());
}

Jet jet_sin(const Jet& a) {
  std::array<Complex, kMaxJetOrder + 1> d{};
  const Complex s = std::sin(a.value()), c = std::cos(a.value());
  const Complex cycle[4] = {s, c, -s, -c};
  for (int m = 0; m <= a.order(); ++m) d[m] = cycle[m % 4];
  return compose(a, d.data());
}

Jet jet_cos(const Jet& a) {
  std::array<Complex, kMaxJetOrder + 1> d{};
  const Complex s = std::sin(a.value()), c = std::cos(a.value());
  const Complex cycle[4] = {c, -s, -c, s};
  for (int m = 0; m <= a.order(); ++m) d[m] = cycle[m % 4];
  return compose(a, d.data());
}

Jet jet_atan(const Jet& a) {
  // atan(a0 + δ) = atan(a0) + atan(δ / (1 + a0 (a0 + δ))).
  const Complex a0 = a.value();
  const Jet t = a.nilpotent() / (a * a0 + 1.0);
  std::array<Complex, kMaxJetOrder + 1> w{};
  w[0] = std::atan(a0);
  for (int m = 1; m <= a.order(); m += 2) w[m] = ((m / 2) % 2 ? -1.0 : 1.0) / static_cast<double>(m);
  return series_in_nilpotent(t, w.data());
}

Complex extract(int k, const Jet& a) {
  if (k < 0 || k > a.order())
    throw DomainError("extract: index " + std::to_string(k) + " beyond jet order " +
                      std::to_string(a.order()));
  return a[k];
}

double distance(const Jet& a, const Jet& b) {
  same_order(a, b);
  double m = 0.0;
  for (int k = 0; k <= a.order(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

}  // namespace hypint
