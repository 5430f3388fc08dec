#include <doctest.h>

#include <cmath>

#include "hypint/numkernel.hpp"
#include "hypint/pfq.hpp"
#include "support.hpp"

using namespace hypint;
using testing_support::kZeta3;
using testing_support::rel_err;

namespace {

PFQSpec S(std::vector<Complex> up, std::vector<Complex> lo, Complex scale = 1.0, Rational power = 1) {
  return PFQSpec::scalar(up, lo, scale, power);
}

}  // namespace

TEST_CASE("construction rejects malformed specs") {
  CHECK_THROWS_AS(S({1, 1, 1}, {2}), DomainError);
  CHECK_THROWS_AS(S({1}, {-2}), DomainError);
  CHECK_THROWS_AS(S({1}, {2}, 1.0, Rational(0)), DomainError);
  CHECK_THROWS_AS(PFQSpec({Jet(1.0, 2)}, {Jet(2.0, 3)}), OrderMismatch);
}

TEST_CASE("sigma is lower sum minus upper sum") {
  const PFQSpec s = S({1, 0.5}, {1.5});
  CHECK(std::abs(s.sigma().value()) == doctest::Approx(0.0));
  const PFQSpec t = S({0.25}, {2, 3});
  CHECK(t.sigma().value().real() == doctest::Approx(4.75));
}

TEST_CASE("classify") {
  CHECK(classify(S({1}, {})).kind == SeriesKind::UnitDisk);
  CHECK(classify(S({}, {1.5})).kind == SeriesKind::Entire);
  CHECK(classify(S({-3, 0.5}, {1.25})).kind == SeriesKind::Polynomial);
  // A non-positive integer with a nilpotent part does not terminate.
  const PFQSpec shifted({Jet::variable(-3.0, 1.0, 2), Jet(0.5, 2)}, {Jet(1.25, 2)});
  CHECK(classify(shifted).kind == SeriesKind::UnitDisk);
}

TEST_CASE("str renders parameters and argument") {
  CHECK(S({1, 0.5}, {1.5}, -1.0, 2).str() == "2F1(1,1/2;3/2;-x^2)");
  CHECK(S({}, {0.5}, -0.25, 2).str() == "0F1(;1/2;-1/4*x^2)");
  CHECK(S({1}, {}).str("t") == "1F0(1;;t)");
}

TEST_CASE("eval examples") {
  CHECK(rel_err(eval(S({1}, {}), 0.5).value(), 2.0) <= 1e-12);
  CHECK(rel_err(eval(S({1, 0.5}, {1.5}), -1.0).value(), kPi / 4) <= 1e-12);
  CHECK(rel_err(eval(S({}, {0.5}, -0.25, 2), kPi).value(), -1.0) <= 1e-13);
  // sin x / x = 0F1(;3/2;−x²/4).
  CHECK(rel_err(eval(S({}, {1.5}, -0.25, 2), 2.0).value(), std::sin(2.0) / 2.0) <= 1e-13);
  // arctan x / x = 2F1(1,1/2;3/2;−x²) at x = 0.3.
  CHECK(rel_err(eval(S({1, 0.5}, {1.5}, -1.0, 2), 0.3).value(), std::atan(0.3) / 0.3) <= 1e-13);
}

TEST_CASE("compensated summation keeps alternating entire series accurate") {
  // (1 − e^{−20})/20 = 1F1(1;2;−20); terms peak near 2e7 before cancelling.
  const Complex got = eval(S({1}, {2}), -20.0).value();
  CHECK(rel_err(got, (1.0 - std::exp(-20.0)) / 20.0) <= 1e-8);
}

TEST_CASE("eval outside the disk diverges") {
  CHECK_THROWS_AS(eval(S({1, 1}, {3}), 1.5), DivergenceError);
  CHECK_THROWS_AS(eval(S({1}, {}), Complex(0.0, 1.2)), DivergenceError);
  // On the circle with Re σ ≤ −1 the terms do not decay.
  CHECK_THROWS_AS(eval(S({2}, {}), Complex(0.0, 1.0)), DivergenceError);
}

TEST_CASE("value_at_zero is the jet identity") {
  const Jet one = value_at_zero(S({1, 0.5}, {1.5}));
  CHECK(one.value() == Complex(1.0));
  const PFQSpec term = S({-3, 0.5}, {1.25});
  CHECK(value_at_zero(term).value() == Complex(1.0));
  const PFQSpec jet({Jet::variable(0.5, 1.0, 2), Jet(1.0, 2)}, {Jet(2.0, 2)});
  const Jet z = value_at_zero(jet);
  CHECK(z.value() == Complex(1.0));
  CHECK(z[1] == Complex(0.0));
  CHECK(z[2] == Complex(0.0));
  CHECK(distance(eval(jet, 0.0), z) == 0.0);
}

TEST_CASE("polynomial class sums exactly within its degree") {
  const PFQSpec s = S({-3, 0.5}, {1.25});
  const double x = 0.7;
  double want = 0.0, term = 1.0;
  for (int k = 0; k <= 3; ++k) {
    want += term;
    term *= (-3.0 + k) * (0.5 + k) / ((1.25 + k) * (k + 1.0)) * x;
  }
  EvalOptions opts;
  opts.term_cap = 4;
  CHECK(rel_err(eval(s, x, opts).value(), want) <= 1e-15);
  // Far outside the unit disk the polynomial still evaluates.
  CHECK_NOTHROW(eval(s, 40.0, opts));
}

TEST_CASE("series_coefficient") {
  const PFQSpec s = S({0.5, 1}, {1.5});
  for (int k = 0; k < 10; ++k) CHECK(rel_err(series_coefficient(s, k).value(), 0.5 / (0.5 + k)) <= 1e-15);
}

TEST_CASE("limit at minus infinity examples") {
  const AsymptoticTerm at = limit_at_minus_infinity(S({1, 0.5}, {1.5}));
  CHECK(at.exponent.value().real() == doctest::Approx(0.5));
  CHECK(rel_err(at.coefficient.value(), kPi / 2) <= 1e-14);

  const AsymptoticTerm cube = limit_at_minus_infinity(S({1, 1.0 / 3}, {4.0 / 3}));
  CHECK(cube.exponent.value().real() == doctest::Approx(1.0 / 3));
  CHECK(rel_err(cube.coefficient.value(), cgamma(2.0 / 3) * cgamma(4.0 / 3)) <= 1e-14);

  const double b = 0.7, c = 2.3;
  const AsymptoticTerm poly = limit_at_minus_infinity(S({-2, b}, {c}));
  CHECK(poly.exponent.value().real() == -2.0);
  CHECK(rel_err(poly.coefficient.value(), b * (b + 1) / (c * (c + 1))) <= 1e-15);
}

TEST_CASE("limit at minus infinity reports the failed clause") {
  auto message = [](const PFQSpec& s) {
    try {
      limit_at_minus_infinity(s);
    } catch (const DomainError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message(S({0.5}, {1, 2, 3})).find("p >= q-1") != std::string::npos);
  CHECK(message(S({0.5, 1.5}, {2})).find("mod Z") != std::string::npos);
  CHECK(message(S({Complex(0.5, 1), Complex(0.5, -1)}, {2})).find("tie") != std::string::npos);
  // p = q−1 needs min(a) < Re σ − 1/2.
  CHECK(message(S({2.0}, {1.0, 1.2})).find("sigma") != std::string::npos);
  CHECK(message(S({-1, -2}, {2})).find("exactly one") != std::string::npos);
}

TEST_CASE("leading term matches arctan(t)/t at large t") {
  // 2F1(1,1/2;3/2;−t²) = arctan(t)/t. At t = 10⁶ the companion term from the
  // upper parameter 1 is −1/t, far above 1e−9, so it is added back before
  // comparing with the leading coefficient.
  const PFQSpec s = S({1, 0.5}, {1.5});
  const AsymptoticTerm at = limit_at_minus_infinity(s);
  const double t = 1e6;
  const double x = t * t;
  const double leading = std::pow(x, at.exponent.value().real()) * std::atan(t) / t;
  // Γ(a₀−1)Γ(c)/(Γ(a₀)Γ(c−1)) (−x)^{−1} with a₀ = 1/2 the other upper parameter.
  const Complex companion = cgamma(0.5 - 1.0) * cgamma(1.5) / (cgamma(0.5) * cgamma(0.5)) / x;
  const double corrected = leading - (std::pow(x, 0.5) * companion).real();
  CHECK(std::abs(corrected - at.coefficient.value().real()) <= 1e-9);
  CHECK(std::abs(leading - at.coefficient.value().real()) == doctest::Approx(1.0 / t).epsilon(1e-6));
}

TEST_CASE("eval_at_one examples") {
  const Complex lemn = eval_at_one(S({0.5, 0.25}, {1.25})).value();
  CHECK(rel_err(lemn, cgamma(1.25) * cgamma(0.5) / cgamma(0.75)) <= 1e-14);
  CHECK(rel_err(4.0 * std::sqrt(2.0) * lemn, std::pow(cgamma(0.25), 2) / std::sqrt(kPi)) <= 1e-13);
  CHECK(rel_err(eval_at_one(S({1, 1, 1}, {2, 2})).value(), kPi * kPi / 6) <= 1e-12);
  CHECK(rel_err(eval_at_one(S({1, 1, 1, 1}, {2, 2, 2})).value(), kZeta3) <= 1e-12);
}

TEST_CASE("eval_at_one rejects non-positive sigma") {
  CHECK_THROWS_AS(eval_at_one(S({1, 1}, {2})), DivergenceError);
  CHECK_THROWS_AS(eval_at_one(S({1, 1, 1}, {1.5, 1.5})), DivergenceError);
}

TEST_CASE("Gauss form agrees with accelerated summation") {
  testing_support::Sampler rng(17);
  EvalOptions raw;
  raw.use_gauss = false;
  raw.tol = 1e-11;
  for (int trial = 0; trial < 12; ++trial) {
    const double a = rng.uniform(-0.9, 1.5);
    const double b = rng.uniform(-0.9, 1.5);
    const double c = a + b + rng.uniform(0.3, 2.5);
    if (near_nonpositive_integer(c, 0.05)) continue;
    const PFQSpec s = S({a, b}, {c});
    const Complex gauss = eval_at_one(s).value();
    const Complex summed = eval_at_one(s, raw).value();
    INFO("a=" << a << " b=" << b << " c=" << c);
    CHECK(std::abs(gauss - summed) <= 1e-9 * std::max(1.0, std::abs(gauss)));
  }
}

TEST_CASE("Gelfond's constant from two sums at 1") {
  const Complex i(0.0, 1.0);
  const Complex first = eval_at_one(S({i, -i}, {0.5})).value();
  const Complex second = eval_at_one(S({0.5 + i, 0.5 - i}, {1.5})).value();
  CHECK(rel_err(first + 2.0 * second, std::exp(kPi)) <= 1e-9);
}

TEST_CASE("jet coefficient matches a parameter finite difference") {
  const double a = 0.3, b = 0.7, c = 1.9, h = 1e-5;
  for (Complex x : {Complex(0.5), Complex(-0.95), Complex(0.2, 0.6)}) {
    const PFQSpec s({Jet::variable(a, 1.0, 3), Jet(b, 3)}, {Jet(c, 3)});
    const Jet got = eval(s, x);
    const Complex fd = (eval(S({a + h, b}, {c}), x).value() - eval(S({a - h, b}, {c}), x).value()) / (2 * h);
    INFO("x=" << x);
    CHECK(std::abs(got[1] - fd) <= 1e-6);
  }
}

TEST_CASE("jet parameters flow through the value at 1") {
  // [ε²] 2F1(ε,−ε;1;1) = −ζ(2).
  const int K = 3;
  const PFQSpec s({Jet::epsilon(K), -Jet::epsilon(K)}, {Jet(1.0, K)});
  const Jet v = eval_at_one(s);
  CHECK(std::abs(v.value() - 1.0) <= 1e-15);
  CHECK(std::abs(v[2] + kPi * kPi / 6) <= 1e-13);
}
