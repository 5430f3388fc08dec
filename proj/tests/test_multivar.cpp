#include <doctest.h>

#include <cmath>

#include "hypint/multivar.hpp"
#include "hypint/oracle.hpp"
#include "support.hpp"

using namespace hypint;
using testing_support::kPi;
using testing_support::rel_err;

namespace {

double F21(Complex a, Complex b, Complex c, double z) {
  return eval_series(PFQSpec::scalar({a, b}, {c}, 1.0, 1, 0), z).value().real();
}

// Frozen high-precision values.
constexpr double kI1 = 0.444703811544794681787;
constexpr double kIminus1 = 2.26169259577552096285;
constexpr double kIminus2 = 5.14425151096507643597;
constexpr double kI2 = 0.198918386988173115841;
constexpr double kDIdalphaAt0 = -0.813245254998229839820;
constexpr double k3F2Example = 0.70645267473706778739;

}  // namespace

TEST_CASE("Appell series reduce to 2F1 on an axis") {
  const double x = 0.3;
  CHECK(rel_err(eval_double(DoubleSeriesSpec::appell_f1(0.7, 1.3, 2.1, 2.4, x, 0.0)), F21(0.7, 1.3, 2.4, x)) <= 1e-12);
  CHECK(rel_err(eval_double(DoubleSeriesSpec::appell_f2(0.7, 1.3, 2.1, 2.4, 1.6, x, 0.0)), F21(0.7, 1.3, 2.4, x)) <=
        1e-12);
  CHECK(rel_err(eval_double(DoubleSeriesSpec::appell_f1(0.7, 1.3, 2.1, 2.4, 0.0, x)), F21(0.7, 2.1, 2.4, x)) <= 1e-12);
}

TEST_CASE("Appell series against independent forms") {
  // F1(1; b1, b2; 2; x, y) = ∫₀¹ (1−xt)^{−b1} (1−yt)^{−b2} dt.
  for (auto [b1, b2, x, y] : {std::array{0.5, 1.5, 0.4, -0.6}, std::array{2.0, -0.5, -0.8, 0.7},
                              std::array{1.0, 1.0, 0.9, 0.2}}) {
    const double ref = oracle::quad_finite(
                           oracle::RealFn([=](double t) {
                             return std::pow(1 - x * t, -b1) * std::pow(1 - y * t, -b2);
                           }),
                           0.0, 1.0, 1e-13)
                           .value;
    CHECK(rel_err(eval_double(DoubleSeriesSpec::appell_f1(1, b1, b2, 2, x, y)), ref) <= 1e-10);
  }
  // F2(a; b1, b2; b1, b2; x, y) = (1−x−y)^{−a}.
  for (auto [x, y] : {std::pair{0.3, 0.4}, std::pair{-0.5, 0.2}, std::pair{0.1, -0.7}}) {
    const Complex v = eval_double(DoubleSeriesSpec::appell_f2(1.7, 0.4, 2.2, 0.4, 2.2, x, y));
    CHECK(rel_err(v, std::pow(1 - x - y, -1.7)) <= 1e-10);
  }
}

TEST_CASE("double series preconditions") {
  CHECK_THROWS_AS(eval_double(DoubleSeriesSpec::appell_f1(1, 1, 1, 2, 1.0, 0.2)), DomainError);
  CHECK_THROWS_AS(eval_double(DoubleSeriesSpec::appell_f2(1, 1, 1, 2, 2, 0.6, 0.5)), DomainError);
  CHECK_NOTHROW(eval_double(DoubleSeriesSpec::appell_f1(1, 1, 1, 2, 0.6, 0.5)));
  CHECK_THROWS_AS(eval_double(DoubleSeriesSpec::appell_f1(1, 1, 1, -2, 0.1, 0.1)), PoleError);
  CHECK_THROWS_AS(ialpha_series_rep(-1.0), PoleError);
  CHECK(DoubleSeriesSpec::appell_f1(1, 0.5, 2, 3, 0.25, -0.5).str() == "F1(1;3 | 1/2; | 2;; 1/4, -1/2)");
}

TEST_CASE("I_alpha series representations") {
  CHECK(std::abs(ialpha_series_value(0.0) - 1.0) <= 1e-14);
  CHECK(std::abs(ialpha_series_value(0.0, IalphaVariant::Shifted) - 1.0) <= 1e-14);
  CHECK(rel_err(ialpha_series_value(0.5), ialpha_series_value(0.5, IalphaVariant::Shifted)) <= 1e-9);
  CHECK(rel_err(ialpha_series_value(1.0), kI1) <= 1e-11);
  CHECK(rel_err(ialpha_series_value(2.0, IalphaVariant::Shifted), kI2) <= 1e-11);
  CHECK(rel_err(ialpha_series_value(-1.0), kIminus1) <= 1e-8);
  CHECK(rel_err(ialpha_series_value(-1.0, IalphaVariant::Shifted), kIminus1) <= 1e-8);
  CHECK(rel_err(ialpha_series_value(-2.0), kIminus2) <= 1e-8);
  for (double alpha : {-1.0, 0.5, 1.0, 2.0})
    CHECK(rel_err(ialpha_series_value(alpha), ialpha_oracle(alpha)) <= 1e-7);
}

TEST_CASE("substitution and the two single integrals") {
  for (double alpha : {-1.0, 0.0, 0.5, 1.0, 2.0})
    CHECK(rel_err(ialpha_oracle(alpha), ialpha_oracle_unit(alpha)) <= 1e-10);
  const PhiIntegrand phi;
  for (double alpha : {-0.5, 0.5, 1.0, 2.0, 3.5}) {
    const PhiIntegrand f{phi.alpha_phi, alpha, 0.5};
    for (double t : {0.05, 0.3, 0.5, 0.77, 0.95}) {
      CHECK(rel_err(ialpha_integrand_direct(alpha, t), ialpha_integrand_shifted(alpha, t)) <= 1e-12);
      CHECK(rel_err(ialpha_integrand_direct(alpha, t), f.on_unit(t)) <= 1e-12);
    }
  }
}

TEST_CASE("I_alpha closed forms") {
  CHECK(ialpha_closed(IalphaCase::I0) == 1.0);
  CHECK(rel_err(ialpha_closed(IalphaCase::I1), kI1) <= 1e-13);
  CHECK(rel_err(ialpha_closed(IalphaCase::Iminus1), kIminus1) <= 1e-13);
  CHECK(rel_err(ialpha_closed(IalphaCase::IminusN, 1), kIminus1) <= 1e-13);
  CHECK(rel_err(ialpha_closed(IalphaCase::IminusN, 2), kIminus2) <= 1e-13);
  CHECK(rel_err(ialpha_closed(IalphaCase::I2), kI2) <= 1e-12);
  CHECK(rel_err(ialpha_closed(IalphaCase::DIdalphaAt0), kDIdalphaAt0) <= 1e-13);
  for (int n = 1; n <= 4; ++n) CHECK(rel_err(ialpha_closed(IalphaCase::IminusN, n), ialpha_oracle(-n)) <= 1e-10);
  CHECK(rel_err(ialpha_closed(IalphaCase::I1), ialpha_oracle(1)) <= 1e-10);
  CHECK(rel_err(ialpha_closed(IalphaCase::I2), ialpha_oracle(2)) <= 1e-10);

  constexpr double h = 1e-4;
  const double central = (ialpha_oracle(h) - ialpha_oracle(-h)) / (2 * h);
  CHECK(std::abs(central - ialpha_closed(IalphaCase::DIdalphaAt0)) <= 1e-5);

  CHECK(ialpha_case(ialpha_case_name(IalphaCase::I2)) == IalphaCase::I2);
  CHECK_THROWS_AS(ialpha_case("I7"), UnknownName);
  CHECK_THROWS_AS(ialpha_closed(IalphaCase::IminusN, 1.5), DomainError);
}

TEST_CASE("the true family") {
  CHECK(rel_err(ialpha_closed(IalphaCase::Itrue), kPi / (2 * std::sqrt(6.0))) <= 1e-15);
  CHECK(rel_err(ialpha_true_oracle(1 / std::sqrt(3.0)), ialpha_closed(IalphaCase::Itrue)) <= 1e-9);
  for (double a : {0.3, 1 / std::sqrt(3.0), 2.0})
    CHECK(rel_err(ialpha_true_oracle(a), ialpha_closed(IalphaCase::IalphaTrue, a)) <= 1e-9);
}

TEST_CASE("3F2 example closed form") {
  const PFQSpec spec = PFQSpec::scalar({2, 0.75, 1.25}, {1.75, 2.25}, -1.0, 4, 0);
  CHECK(rel_err(eval_3F2_example_closed(1.0), k3F2Example) <= 1e-14);
  CHECK(rel_err(eval(spec, 1.0).value(), k3F2Example) <= 1e-10);
  for (double x : {0.05, 0.2, 0.3, 0.31, 0.5, 0.8, 0.99, 1.0})
    CHECK(rel_err(eval_3F2_example_closed(x), eval(spec, x).value()) <= 1e-10);
  CHECK(std::abs(eval_3F2_example_closed(1e-6) - 1.0) <= 1e-15);
  CHECK_THROWS_AS(eval_3F2_example_closed(0.0), DomainError);
}
