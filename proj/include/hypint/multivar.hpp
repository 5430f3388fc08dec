#pragma once

#include <string>
#include <vector>

#include "hypint/errors.hpp"
#include "hypint/pfq.hpp"

namespace hypint {

enum class DoubleKind { F1, F2, F1Tilde };

// prefactor · Σ_{j,k} outer(j+k) · X(j) · Y(k) · x^j y^k with
//   outer(n) = ∏(outer_upper)_n / ∏(outer_lower)_n,
//   X(j) = ∏(x_upper)_j / (∏(x_lower)_j j!),  Y(k) = ∏(y_upper)_k / (∏(y_lower)_k k!).
// F1(a; b1, b2; c): outer (a; c), X (b1;), Y (b2;).
// F2(a; b1, b2; c1, c2): outer (a;), X (b1; c1), Y (b2; c2).
// F̃1: outer (α1, α2; γ1, γ2), X (a1, a2; c), Y (b;).
struct DoubleSeriesSpec {
  DoubleKind kind = DoubleKind::F1;
  std::vector<Complex> outer_upper, outer_lower;
  std::vector<Complex> x_upper, x_lower;
  std::vector<Complex> y_upper, y_lower;
  Complex x = 0.0, y = 0.0;
  Complex prefactor = 1.0;

  static DoubleSeriesSpec appell_f1(Complex a, Complex b1, Complex b2, Complex c, Complex x, Complex y);
  static DoubleSeriesSpec appell_f2(Complex a, Complex b1, Complex b2, Complex c1, Complex c2, Complex x, Complex y);
  static DoubleSeriesSpec f1_tilde(Complex alpha1, Complex alpha2, Complex gamma1, Complex gamma2, Complex a1,
                                   Complex a2, Complex c, Complex b, Complex x, Complex y);
  std::string str() const;
};

// Sums along the diagonals j + k = n until a geometric tail bound drops below
// tol. Throws DomainError outside the kind's convergence domain (|x|, |y| < 1
// for F1 and F̃1, |x| + |y| < 1 for F2) or at a lower-parameter pole, and
// ConvergenceError at the term cap.
Complex eval_double(const DoubleSeriesSpec& spec, double tol = kSeriesTol);

// The two F̃1 forms of I_α, related by applying Pfaff twice to the inner 2F1:
// Direct:  2^{−α} F̃1(1, 1/2; 3/4, 5/4 | α/2, (α+1)/2; α+1 | α/2; −1/3, −1/3),
// Shifted: 2^{−α} F̃1(1, 1/2; 3/4, 5/4 | 1+α/2, (α+1)/2; α+1 | (α−1)/2; −1/3, −1/3).
enum class IalphaVariant { Direct, Shifted };
// Throws PoleError when α+1 is a non-positive integer; see ialpha_series_value.
DoubleSeriesSpec ialpha_series_rep(double alpha, IalphaVariant variant = IalphaVariant::Direct);
// eval_double of the representation; where α+1 is a non-positive integer the
// removable singularity is resolved by a Richardson-extrapolated symmetric limit.
double ialpha_series_value(double alpha, IalphaVariant variant = IalphaVariant::Direct, double tol = kSeriesTol);

enum class IalphaCase { I0, I1, Iminus1, IminusN, I2, DIdalphaAt0, Itrue, IalphaTrue };
// Closed forms. `param` is n for IminusN and α for IalphaTrue.
double ialpha_closed(IalphaCase c, double param = 0.0);
IalphaCase ialpha_case(const std::string& name);
const char* ialpha_case_name(IalphaCase c);

// Closed elementary form of 3F2(2, 3/4, 5/4; 7/4, 9/4; −x⁴) for 0 < x ≤ 1,
// computed without the series engine.
double eval_3F2_example_closed(double x);

// (1+x²)^{−3/2} (φ + φ^p)^{−exponent}, φ(x) = 1 + 4a²x²/(1+x²)², with
// a = alpha_phi and p = root_power (1/2 for I_α, 3/2 for the "true" family).
struct PhiIntegrand {
  double alpha_phi = 0.5773502691896257;
  double exponent = 0.5;
  double root_power = 0.5;

  double on_halfline(double x) const;
  // After t = x/√(1+x²): (φ + φ^p)^{−exponent} with φ = 1 + 4a²t²(1−t²).
  double on_unit(double t) const;
};

// I_α by quadrature of the [0, ∞) form.
double ialpha_oracle(double alpha, double tol = 1e-12);
// Same integral after the substitution, over [0, 1].
double ialpha_oracle_unit(double alpha, double tol = 1e-12);
double ialpha_true_oracle(double a, double tol = 1e-12);

// The two single-integral forms of I_α on [0, 1] before hypergeometrization,
// each evaluated with the series engine; they agree pointwise.
double ialpha_integrand_direct(double alpha, double t);
double ialpha_integrand_shifted(double alpha, double t);

}  // namespace hypint
