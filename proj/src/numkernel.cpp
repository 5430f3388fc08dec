#include "hypint/numkernel.hpp"

#include <array>
#include <cmath>

namespace hypint {

namespace {

// Godfrey's coefficients, g = 607/128.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczos = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   .33994649984811888699e-4,
    .46523628927048575665e-4,   -.98374475304879564677e-4, .15808870322491248884e-3,
    -.21026444172410488319e-3,  .21743961811521264320e-3,  -.16431810653676389022e-3,
    .84418223983852743293e-4,   -.26190838401581408670e-4, .36899182659531622704e-5};

constexpr double kHalfLog2Pi = 0.91893853320467274178;
constexpr double kSqrt2Pi = 2.50662827463100050242;

constexpr std::array<double, 11> kBernoulli = {
    1.0,           1.0 / 6.0,     -1.0 / 30.0,        1.0 / 42.0,
    -1.0 / 30.0,   5.0 / 66.0,    -691.0 / 2730.0,    7.0 / 6.0,
    -3617.0 / 510.0, 43867.0 / 798.0, -174611.0 / 330.0};

constexpr double kPsiShift = 15.0;

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Lanczos sum for Γ(zz + 1), with zz = z − 1.
Complex lanczos_sum(Complex zz) {
  Complex x = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) x += kLanczos[i] / (zz + static_cast<double>(i));
  return x;
}

double sinpi_real(double x) {
  double r = std::fmod(x, 2.0);
  if (r < 0) r += 2.0;
  if (r == 0.0 || r == 1.0) return 0.0;
  if (r == 0.5) return 1.0;
  if (r == 1.5) return -1.0;
  return std::sin(kPi * r);
}

double cospi_real(double x) { return sinpi_real(x + 0.5); }

Complex psi_asymptotic(int n, Complex z) {
  const Complex zi = 1.0 / z;
  if (n == 0) {
    Complex s = std::log(z) - 0.5 * zi;
    const Complex z2 = zi * zi;
    Complex p = z2;
    for (int k = 1; k <= 10; ++k) {
      s -= kBernoulli[k] / (2.0 * k) * p;
      p *= z2;
    }
    return s;
  }
  // (−1)^{n+1} [ (n−1)!/z^n + n!/(2 z^{n+1}) + Σ B_{2k} (2k+n−1)!/((2k)! z^{2k+n}) ]
  Complex zn = std::pow(zi, n);
  Complex s = factorial(n - 1) * zn + 0.5 * factorial(n) * zn * zi;
  const Complex z2 = zi * zi;
  Complex p = zn * z2;
  for (int k = 1; k <= 10; ++k) {
    s += kBernoulli[k] * factorial(2 * k + n - 1) / factorial(2 * k) * p;
    p *= z2;
  }
  return (n % 2 == 1) ? s : -s;
}

}  // namespace

bool is_nonpositive_integer(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

bool near_nonpositive_integer(Complex z, double tol) {
  const double r = std::round(z.real());
  return r <= 0.0 && std::abs(z - Complex(r)) <= tol;
}

Complex sinpi(Complex z) {
  if (z.imag() == 0.0) return sinpi_real(z.real());
  const double y = kPi * z.imag();
  return {sinpi_real(z.real()) * std::cosh(y), cospi_real(z.real()) * std::sinh(y)};
}

Complex cospi(Complex z) {
  if (z.imag() == 0.0) return cospi_real(z.real());
  const double y = kPi * z.imag();
  return {cospi_real(z.real()) * std::cosh(y), -sinpi_real(z.real()) * std::sinh(y)};
}

Complex cgamma(Complex z) {
  if (is_nonpositive_integer(z)) throw PoleError(z, "gamma");
  if (z.real() < 0.5) return kPi / (sinpi(z) * cgamma(1.0 - z));
  const Complex zz = z - 1.0;
  const Complex t = zz + kLanczosG + 0.5;
  const Complex x = lanczos_sum(zz);
  if (z.imag() == 0.0) {
    const double tr = t.real();
    return kSqrt2Pi * std::pow(tr, zz.real() + 0.5) * std::exp(-tr) * x.real();
  }
  return kSqrt2Pi * std::exp((zz + 0.5) * std::log(t) - t) * x;
}

Complex crgamma(Complex z) {
  if (is_nonpositive_integer(z)) return 0.0;
  if (z.real() < 0.5) return sinpi(z) * cgamma(1.0 - z) / kPi;
  return 1.0 / cgamma(z);
}

Complex clgamma(Complex z) {
  if (is_nonpositive_integer(z)) throw PoleError(z, "lgamma");
  if (z.real() < 0.5) return std::log(kPi) - std::log(sinpi(z)) - clgamma(1.0 - z);
  const Complex zz = z - 1.0;
  const Complex t = zz + kLanczosG + 0.5;
  return kHalfLog2Pi + (zz + 0.5) * std::log(t) - t + std::log(lanczos_sum(zz));
}

Complex polygamma(int n, Complex z) {
  if (n < 0) throw DomainError("polygamma order must be non-negative");
  if (n > kMaxJetOrder) throw DomainError("polygamma order exceeds the maximal jet order");
  if (is_nonpositive_integer(z)) throw PoleError(z, n == 0 ? "digamma" : "polygamma");
  // ψ^(n)(z) = ψ^(n)(z+1) − (−1)^n n! / z^{n+1}
  Complex shift = 0.0;
  while (z.real() < kPsiShift) {
    shift += std::pow(1.0 / z, n + 1);
    z += 1.0;
  }
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  return psi_asymptotic(n, z) - sign * factorial(n) * shift;
}

Jet gamma_jet(const Jet& z) {
  const Complex z0 = z.value();
  if (is_nonpositive_integer(z0)) throw PoleError(z0, "gamma_jet");
  const int K = z.order();
  if (z.is_scalar()) return Jet(cgamma(z0), K);
  Jet expo(K);
  const Jet delta = z.nilpotent();
  Jet power(1.0, K);
  double fact = 1.0;
  for (int m = 1; m <= K; ++m) {
    power = jet_mul(power, delta);
    fact *= m;
    expo += power * (polygamma(m - 1, z0) / fact);
  }
  return jet_exp(expo) * cgamma(z0);
}

Jet rgamma_jet(const Jet& z) {
  const Complex z0 = z.value();
  if (z.is_scalar()) return Jet(crgamma(z0), z.order());
  if (z0.real() < 0.5) {
    // 1/Γ(z) = Γ(1−z) sin(πz)/π; the sine jet is built from exact sinpi/cospi.
    std::array<Complex, kMaxJetOrder + 1> d{};
    const Complex s = sinpi(z0), c = cospi(z0);
    const Complex cycle[4] = {s, c, -s, -c};
    double pk = 1.0;
    for (int m = 0; m <= z.order(); ++m) {
      d[m] = cycle[m % 4] * pk;
      pk *= kPi;
    }
    return jet_mul(gamma_jet(1.0 - z), compose(z, d.data())) / kPi;
  }
  return reciprocal(gamma_jet(z));
}

Jet digamma_jet(const Jet& z) {
  std::array<Complex, kMaxJetOrder + 1> d{};
  for (int m = 0; m <= z.order(); ++m) d[m] = polygamma(m, z.value());
  return compose(z, d.data());
}

Complex pochhammer(Complex a, int k) {
  Complex p = 1.0;
  for (int j = 0; j < k; ++j) p *= a + static_cast<double>(j);
  return p;
}

Jet pochhammer(const Jet& a, int k) {
  Jet p(1.0, a.order());
  for (int j = 0; j < k; ++j) p = jet_mul(p, a + static_cast<double>(j));
  return p;
}

double bernoulli_even(int k) {
  if (k < 0 || k >= static_cast<int>(kBernoulli.size())) throw DomainError("bernoulli index out of range");
  return kBernoulli[k];
}

}  // namespace hypint
