#include <cmath>
#include <vector>

#include "doctest.h"
#include "hypint/errors.hpp"
#include "hypint/oracle.hpp"
#include "support.hpp"

using namespace hypint::oracle;
using testing_support::kCatalan;
using testing_support::kLn2;
using testing_support::kPi;

TEST_CASE("quad_finite examples") {
  const auto r1 = quad_finite([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0);
  CHECK(std::abs(r1.value - 2.0) <= 1e-10);

  const auto r2 = quad_finite([](double x) { return x == 0.0 ? 1.0 : std::atan(x) / x; }, 0.0, 1.0, 1e-12);
  CHECK(std::abs(r2.value - kCatalan) <= 1e-13);
  // Alternating series Σ(−1)^k/(2k+1)², paired to speed convergence.
  double series = 0.0;
  for (int k = 200000; k >= 0; --k) series += (k % 2 ? -1.0 : 1.0) / ((2.0 * k + 1) * (2.0 * k + 1));
  CHECK(std::abs(r2.value - series) <= 1e-11);

  const auto r3 = quad_finite(
      EndpointFn([](double x, double, double to_one) {
        const double one_minus_x2 = to_one * (1.0 + x);
        return x * std::log(1.0 / one_minus_x2) * elementary::ellipk(x, to_one);
      }),
      0.0, 1.0);
  CHECK(std::abs(r3.value - 4.0 * (1.0 - kLn2)) <= 1e-10);
}

TEST_CASE("quad_halfline examples") {
  CHECK(std::abs(quad_halfline([](double x) { return 1.0 / (1.0 + x * x); }).value - kPi / 2) <= 1e-11);
  CHECK(std::abs(quad_halfline([](double x) { return 1.0 / (1.0 + x * x * x); }).value - 1.2091995761561452) <= 1e-11);
  CHECK(std::abs(quad_halfline([](double x) { return std::exp(-x * x); }).value - std::sqrt(kPi) / 2) <= 1e-11);
  CHECK_THROWS_AS(quad_halfline([](double x) { return 1.0 / (1.0 + x); }), hypint::DivergenceError);
}

TEST_CASE("halfline result does not depend on the substitution") {
  const std::vector<RealFn> fs = {
      [](double x) { return 1.0 / (1.0 + x * x); },
      [](double x) { return std::pow(x, -0.875) * std::sqrt(elementary::sqrt1p_m1(x)) / (1.0 + x); },
      [](double x) { return std::exp(-x) * std::sqrt(x); },
      [](double x) { return std::atan(x) * std::pow(x, -1.5) * std::log(1.0 / (1.0 + x * x)); },
  };
  for (const auto& f : fs) {
    const double a = quad_halfline(f, 1e-12, HalflineMap::Rational).value;
    const double b = quad_halfline(f, 1e-12, HalflineMap::Tangent).value;
    CHECK(std::abs(a - b) <= 1e-10 * std::max(1.0, std::abs(a)));
  }
}

TEST_CASE("error estimates are honest on known integrals") {
  struct Known {
    QuadratureResult result;
    double truth;
  };
  const std::vector<Known> cases = {
      {quad_finite([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0), 2.0},
      {quad_finite([](double x) { return x == 0.0 ? 1.0 : std::atan(x) / x; }, 0.0, 1.0), kCatalan},
      {quad_finite([](double x) { return std::log(x); }, 0.0, 1.0), -1.0},
      {quad_finite(EndpointFn([](double x, double, double s) { return std::sqrt(s * (1.0 + x)); }), 0.0, 1.0),
       kPi / 4},
      {quad_finite([](double x) { return std::sin(x); }, 0.0, kPi), 2.0},
      {quad_finite(EndpointFn([](double x, double, double s) { return elementary::ellipk(x, s); }), 0.0, 1.0),
       2.0 * kCatalan},
      {quad_finite([](double x) { return std::exp(x); }, 0.0, 1.0), std::exp(1.0) - 1.0},
      {quad_halfline([](double x) { return 1.0 / (1.0 + x * x); }), kPi / 2},
      {quad_halfline([](double x) { return 1.0 / (std::sqrt(x) * (1.0 + x)); }), kPi},
      {quad_halfline([](double x) { return std::exp(-x * x); }), std::sqrt(kPi) / 2},
  };
  for (const auto& c : cases) {
    CHECK(c.result.error_estimate >= 0.0);
    CHECK(std::abs(c.result.value - c.truth) <= 5.0 * c.result.error_estimate);
    CHECK(std::abs(c.result.value - c.truth) <= 1e-10 * std::abs(c.truth));
  }
}

TEST_CASE("elementary evaluators") {
  // K(1/√2) = Γ(1/4)² / (4√π).
  const double g14 = 3.62560990822190831193;
  CHECK(std::abs(elementary::ellipk(std::sqrt(0.5)) - g14 * g14 / (4.0 * std::sqrt(kPi))) <= 1e-14);
  CHECK(std::abs(elementary::ellipk(0.0) - kPi / 2) <= 1e-15);
  // K(ik) = K(k/√(1+k²)) / √(1+k²).
  const double k = 0.7, s = std::sqrt(1 + k * k);
  CHECK(std::abs(elementary::ellipk_imag(k) - elementary::ellipk(k / s) / s) <= 1e-14);
  CHECK(std::abs(elementary::sqrt1p_m1(1e-20) - 5e-21) <= 1e-35);
  CHECK(std::abs(elementary::sqrt1p_m1(3.0) - 1.0) <= 1e-15);
  for (double x : {1e-8, 0.3, 1.0, 17.0, 1e9}) {
    const double y = elementary::trinomial_root(5, 2.0, x);
    CHECK(std::abs(2.0 * std::pow(y, 5) + y - x) <= 1e-14 * x);
  }
  const double y2 = elementary::trinomial_root(2, 0.2, 0.5);
  CHECK(std::abs(y2 - (-1.0 + std::sqrt(1.0 + 0.4)) / 0.4) <= 1e-15);
}
