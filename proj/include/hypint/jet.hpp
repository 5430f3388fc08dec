#pragma once

#include <array>
#include <complex>
#include <initializer_list>

#include "hypint/errors.hpp"

namespace hypint {

inline constexpr int kDefaultJetOrder = 3;
inline constexpr int kMaxJetOrder = 8;

// Truncated Taylor polynomial c0 + c1 ε + ... + cK ε^K. Coefficients beyond K
// are kept at zero and never read. Binary operations require equal orders.
class Jet {
 public:
  explicit Jet(int order = kDefaultJetOrder);
  Jet(Complex value, int order);
  Jet(std::initializer_list<Complex> coeffs, int order);

  // value + slope·ε.
  static Jet variable(Complex value, Complex slope, int order);
  static Jet epsilon(int order) { return variable(0.0, 1.0, order); }

  int order() const { return order_; }
  Complex value() const { return c_[0]; }
  Complex operator[](int k) const { return c_[k]; }
  Complex& operator[](int k) { return c_[k]; }

  // True when every nilpotent coefficient is exactly zero.
  bool is_scalar() const;
  // Max modulus over coefficients.
  double norm() const;
  Jet nilpotent() const;
  // Same coefficients, truncated or zero-padded to another order.
  Jet with_order(int order) const;

  Jet& operator+=(const Jet& b);
  Jet& operator-=(const Jet& b);
  Jet& operator*=(const Jet& b);
  Jet& operator/=(const Jet& b);
  Jet& operator+=(Complex b) { c_[0] += b; return *this; }
  Jet& operator-=(Complex b) { c_[0] -= b; return *this; }
  Jet& operator*=(Complex b);
  Jet& operator/=(Complex b) { return *this *= 1.0 / b; }

 private:
  int order_;
  std::array<Complex, kMaxJetOrder + 1> c_{};
};

Jet operator-(const Jet& a);
inline Jet operator+(Jet a, const Jet& b) { return a += b; }
inline Jet operator-(Jet a, const Jet& b) { return a -= b; }
inline Jet operator*(Jet a, const Jet& b) { return a *= b; }
inline Jet operator/(Jet a, const Jet& b) { return a /= b; }
inline Jet operator+(Jet a, Complex b) { return a += b; }
inline Jet operator-(Jet a, Complex b) { return a -= b; }
inline Jet operator*(Jet a, Complex b) { return a *= b; }
inline Jet operator/(Jet a, Complex b) { return a /= b; }
inline Jet operator+(Complex a, Jet b) { return b += a; }
inline Jet operator-(Complex a, const Jet& b) { return -b + a; }
inline Jet operator*(Complex a, Jet b) { return b *= a; }
Jet operator/(Complex a, const Jet& b);

Jet jet_mul(const Jet& a, const Jet& b);
Jet reciprocal(const Jet& a);
Jet jet_log(const Jet& a);
Jet jet_exp(const Jet& a);
Jet jet_pow(const Jet& a, Complex p);
Jet jet_pow(const Jet& a, const Jet& p);
Jet jet_sqrt(const Jet& a);
Jet jet_sin(const Jet& a);
Jet jet_cos(const Jet& a);
Jet jet_atan(const Jet& a);

// Coefficient of ε^k.
Complex extract(int k, const Jet& a);

// Composition f(a0 + δ) = Σ_m derivs[m]·δ^m/m! where derivs[m] = f^(m)(a0).
Jet compose(const Jet& a, const Complex* derivs);

// Max over coefficients of |a_k − b_k|.
double distance(const Jet& a, const Jet& b);

}  // namespace hypint
