#include <cmath>
#include <functional>
#include <vector>

#include "doctest.h"
#include "hypint/jet.hpp"
#include "support.hpp"

using namespace hypint;
using testing_support::rel_err;
using testing_support::Sampler;

namespace {

// Independent truncated polynomial product.
std::vector<Complex> naive_product(const Jet& a, const Jet& b) {
  const int K = a.order();
  std::vector<Complex> c(K + 1, 0.0);
  for (int i = 0; i <= K; ++i)
    for (int j = 0; j <= K; ++j)
      if (i + j <= K) c[i + j] += a[i] * b[j];
  return c;
}

}  // namespace

TEST_CASE("jet_mul examples") {
  const Jet e = Jet::epsilon(3);
  const Jet p = (e + 1.0) * (1.0 - e);
  CHECK(p[0] == Complex(1.0));
  CHECK(p[1] == Complex(0.0));
  CHECK(p[2] == Complex(-1.0));

  const Jet q = Jet(2.0, 3) * (e + 3.0);
  CHECK(q[0] == Complex(6.0));
  CHECK(q[1] == Complex(2.0));

  const Jet a({1.0, 1.0, 1.0}, 2);
  const Jet b({1.0, 1.0}, 2);
  const Jet r = jet_mul(a, b);
  CHECK(r[0] == Complex(1.0));
  CHECK(r[1] == Complex(2.0));
  CHECK(r[2] == Complex(2.0));
}

TEST_CASE("mixed orders are rejected") {
  CHECK_THROWS_AS(Jet(1.0, 2) + Jet(1.0, 3), OrderMismatch);
  CHECK_THROWS_AS(jet_mul(Jet(1.0, 2), Jet(1.0, 4)), OrderMismatch);
  CHECK_THROWS_AS(Jet(1.0, kMaxJetOrder + 1), DomainError);
}

TEST_CASE("jet_pow examples") {
  const Jet e = Jet::epsilon(3);
  const Jet s = jet_pow(e + 1.0, 0.5);
  CHECK(std::abs(s[0] - 1.0) < 1e-15);
  CHECK(std::abs(s[1] - 0.5) < 1e-15);
  CHECK(std::abs(s[2] + 0.125) < 1e-15);
  CHECK(std::abs(s[3] - 0.0625) < 1e-15);

  CHECK(std::abs(jet_pow(Jet(4.0, 3), 0.5)[0] - 2.0) < 1e-15);

  // (1−x)^{−2ε} at x = 1/2 is exp(2ε ln 2).
  const Jet t = jet_pow(Jet(0.5, 3), -2.0 * e);
  const double l = std::log(2.0);
  CHECK(std::abs(t[0] - 1.0) < 1e-15);
  CHECK(std::abs(t[1] - 2.0 * l) < 1e-15);
  CHECK(std::abs(t[2] - 2.0 * l * l) < 1e-15);

  CHECK_THROWS_AS(jet_pow(Jet(0.0, 3), 0.5), DomainError);
  CHECK_THROWS_AS(reciprocal(e), DomainError);
}

TEST_CASE("jet_log and jet_exp") {
  const Jet e = Jet::epsilon(3);
  const Jet l = jet_log(e + 1.0);
  CHECK(std::abs(l[0]) < 1e-16);
  CHECK(std::abs(l[1] - 1.0) < 1e-15);
  CHECK(std::abs(l[2] + 0.5) < 1e-15);
  CHECK(std::abs(l[3] - 1.0 / 3.0) < 1e-15);

  CHECK(jet_exp(Jet(3))[0] == Complex(1.0));

  const Jet rt = jet_exp(jet_log(e + 2.0));
  CHECK(std::abs(rt[0] - 2.0) <= 1e-14);
  CHECK(std::abs(rt[1] - 1.0) <= 1e-14);
  CHECK(std::abs(rt[2]) <= 1e-14);

  CHECK_THROWS_AS(jet_log(Jet(-1.0, 3)), DomainError);
  CHECK_THROWS_AS(jet_log(Jet(0.0, 3)), DomainError);
}

TEST_CASE("extract") {
  const Jet e = Jet::epsilon(3);
  const Jet t = jet_pow(Jet(2.0, 3), -2.0 * e);
  CHECK(std::abs(extract(1, t) + 2.0 * std::log(2.0)) < 1e-15);
  const Jet any({3.0, 4.0, 5.0}, 2);
  CHECK(extract(0, any) == Complex(3.0));
  CHECK_THROWS_AS(extract(3, any), DomainError);
}

TEST_CASE("ring axioms on random jets") {
  Sampler s(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int K = s.integer(0, 6);
    const Jet a = s.jet(K, 10.0), b = s.jet(K, 10.0), c = s.jet(K, 10.0);
    const Jet ab_c = (a * b) * c, a_bc = a * (b * c);
    const Jet dist_l = a * (b + c), dist_r = a * b + a * c;
    for (int k = 0; k <= K; ++k) {
      CHECK(std::abs(ab_c[k] - a_bc[k]) <= 1e-13 * std::max(1.0, ab_c.norm()));
      CHECK(std::abs(dist_l[k] - dist_r[k]) <= 1e-13 * std::max(1.0, dist_l.norm()));
    }
  }
}

TEST_CASE("jet_mul agrees exactly with a naive convolution") {
  Sampler s(12);
  for (int trial = 0; trial < 200; ++trial) {
    const int K = s.integer(0, kMaxJetOrder);
    const Jet a = s.jet(K, 10.0), b = s.jet(K, 10.0);
    const Jet p = jet_mul(a, b);
    const auto want = naive_product(a, b);
    for (int k = 0; k <= K; ++k) CHECK(p[k] == want[k]);
  }
}

TEST_CASE("jet derivatives match finite differences") {
  using F = std::function<Jet(const Jet&)>;
  using G = std::function<Complex(Complex)>;
  struct Case {
    F jet;
    G scalar;
    double x;
  };
  const std::vector<Case> cases = {
      {[](const Jet& a) { return jet_exp(a); }, [](Complex z) { return std::exp(z); }, 0.7},
      {[](const Jet& a) { return jet_log(a); }, [](Complex z) { return std::log(z); }, 1.3},
      {[](const Jet& a) { return jet_sqrt(a); }, [](Complex z) { return std::sqrt(z); }, 2.1},
      {[](const Jet& a) { return jet_atan(a); }, [](Complex z) { return std::atan(z); }, 0.4},
      {[](const Jet& a) { return jet_sin(a); }, [](Complex z) { return std::sin(z); }, 1.1},
      {[](const Jet& a) { return jet_cos(a); }, [](Complex z) { return std::cos(z); }, -0.3},
      {[](const Jet& a) { return jet_pow(a, Complex(-1.5, 0.5)); },
       [](Complex z) { return std::pow(z, Complex(-1.5, 0.5)); }, 0.9},
      {[](const Jet& a) { return reciprocal(a * a + 1.0); }, [](Complex z) { return 1.0 / (z * z + 1.0); }, 0.6},
  };
  for (const auto& c : cases) {
    const Jet j = c.jet(Jet::variable(c.x, 1.0, 3));
    const double h1 = 1e-5, h2 = 1e-4;
    const Complex d1 = (c.scalar(c.x + h1) - c.scalar(c.x - h1)) / (2 * h1);
    const Complex d2 = (c.scalar(c.x + h2) - 2.0 * c.scalar(c.x) + c.scalar(c.x - h2)) / (h2 * h2);
    CHECK(rel_err(extract(1, j), d1) <= 1e-7);
    CHECK(rel_err(2.0 * extract(2, j), d2) <= 1e-4);
  }
}
