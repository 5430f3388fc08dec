#include "hypint/rational.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "hypint/errors.hpp"

namespace hypint {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  num_ = g ? num / g : 0;
  den_ = g ? den / g : 1;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

bool Rational::approximate(double x, Rational& out, std::int64_t max_den, double tol) {
  if (!std::isfinite(x)) return false;
  // Convergents h/k of the continued fraction of x.
  std::int64_t h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double r = x;
  for (int iter = 0; iter < 64; ++iter) {
    const double fl = std::floor(r);
    if (std::abs(fl) > 9.0e15) break;
    const auto a = static_cast<std::int64_t>(fl);
    const std::int64_t h2 = a * h1 + h0;
    const std::int64_t k2 = a * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1; h1 = h2; k0 = k1; k1 = k2;
    if (std::abs(static_cast<double>(h1) / static_cast<double>(k1) - x) <= tol * std::max(1.0, std::abs(x))) {
      out = Rational(h1, k1);
      return true;
    }
    const double frac = r - fl;
    if (frac == 0.0) break;
    r = 1.0 / frac;
  }
  return false;
}

Rational operator+(Rational a, Rational b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
Rational operator-(Rational a, Rational b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
Rational operator*(Rational a, Rational b) { return Rational(a.num_ * b.num_, a.den_ * b.den_); }
Rational operator/(Rational a, Rational b) { return Rational(a.num_ * b.den_, a.den_ * b.num_); }
bool operator<(Rational a, Rational b) { return a.num_ * b.den_ < b.num_ * a.den_; }

}  // namespace hypint
