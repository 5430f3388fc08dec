#pragma once

#include <cstddef>
#include <functional>
#include <string>

namespace hypint::oracle {

// Shares no code with the series engine.
struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
  std::string method;  // "gauss-kronrod" or "tanh-sinh"
};

using RealFn = std::function<double(double)>;
// Integrand that also receives the exact distances x − a and b − x, so
// endpoint singularities can be evaluated without cancellation.
using EndpointFn = std::function<double(double x, double from_a, double to_b)>;

inline constexpr double kDefaultTol = 1e-11;
inline constexpr std::size_t kNodeBudget = 2'000'000;

// Adaptive Gauss–Kronrod (7/15); switches to tanh-sinh when refinement
// concentrates at an endpoint without meeting tol. tol is relative to |value|.
QuadratureResult quad_finite(const RealFn& f, double a, double b, double tol = kDefaultTol);
QuadratureResult quad_finite(const EndpointFn& f, double a, double b, double tol = kDefaultTol);

enum class HalflineMap { Rational, Tangent };

// ∫_0^∞ f. Rational: x = t/(1−t); Tangent: x = tan(πt/2).
QuadratureResult quad_halfline(const RealFn& f, double tol = kDefaultTol,
                               HalflineMap map = HalflineMap::Rational);

// Elementary evaluators for oracle integrands.
namespace elementary {

double agm(double a, double b);
// K(k) = ∫_0^1 dt / √((1−t²)(1−k²t²)), via the AGM; one_minus_k is 1 − k given exactly.
double ellipk(double k, double one_minus_k);
inline double ellipk(double k) { return ellipk(k, 1.0 - k); }
// K(ik) for real k.
double ellipk_imag(double k);
// √(1+x) − 1 without cancellation.
double sqrt1p_m1(double x);
// Positive root y of α yⁿ + y = x for α > 0, x ≥ 0, by safeguarded Newton.
double trinomial_root(int n, double alpha, double x);

}  // namespace elementary

}  // namespace hypint::oracle
