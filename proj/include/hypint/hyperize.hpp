#pragma once

#include <functional>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "hypint/errors.hpp"
#include "hypint/jet.hpp"
#include "hypint/pfq.hpp"
#include "hypint/rational.hpp"

namespace hypint {

inline constexpr double kInfiniteRadius = std::numeric_limits<double>::infinity();

// Taylor coefficients f_k = f^(k)(0)/k! of a function holomorphic near 0,
// produced lazily and memoized. Copies share the memo.
class CoeffStream {
 public:
  // Called once per index, in order k = 0, 1, 2, ..., under the stream's lock.
  using Generator = std::function<Jet()>;
  using ClosedForm = std::function<Jet(Complex)>;

  // degree < 0 means the series does not terminate.
  CoeffStream(std::string label, double radius, int order, Generator next, ClosedForm closed = {},
              int degree = -1);

  Jet coeff(int k) const;
  double radius() const { return radius_; }
  int order() const { return order_; }
  int degree() const { return degree_; }
  const std::string& label() const { return label_; }

  bool has_closed_form() const { return static_cast<bool>(closed_); }
  // Throws DomainError when no closed form was attached.
  Jet closed_form(Complex x) const;

  // Σ f_k x^k with compensated accumulation; requires |x| < radius.
  Jet eval(Complex x, double tol = kSeriesTol) const;

  static CoeffStream exp(int order = kDefaultJetOrder);
  // (1 − x)^{−b}.
  static CoeffStream binomial(const Jet& b);
  static CoeffStream constant(const Jet& c);
  static CoeffStream arctan(int order = kDefaultJetOrder);
  // 1/(1 + x²), the derivative of arctan.
  static CoeffStream arctan_derivative(int order = kDefaultJetOrder);
  // Coefficients of pFq(a; c; γx) as a stream in x. Requires power 1.
  static CoeffStream from_pfq(const PFQSpec& spec);
  static CoeffStream polynomial(const std::vector<Jet>& coeffs);

 private:
  struct State;
  std::string label_;
  double radius_;
  int order_;
  int degree_;
  ClosedForm closed_;
  std::shared_ptr<State> state_;
};

// f([a; c] x): coefficients multiplied by (a)_k/(c)_k. Throws PoleError when
// c has a non-positive integer base value.
CoeffStream hypize(const CoeffStream& f, const Jet& a, const Jet& c);
// Inverse of hypize: applies (c; a).
CoeffStream undo(const CoeffStream& f, const Jet& a, const Jet& c);

// (a)_{nk}/(c)_{nk} = ∏_j ((a+j)/n)_k / ∏_j ((c+j)/n)_k · scale^k.
struct SplitParams {
  std::vector<Jet> upper;
  std::vector<Jet> lower;
  Complex scale;  // n^{nk}/n^{nk}: 1 for a balanced pair
};
SplitParams power_split(const Jet& a, const Jet& c, int n);
// For f(x) = g(xⁿ): returns h with f([a; c] x) = h(xⁿ), h = g hypergeometrized
// by the split lists.
CoeffStream hypize_split(const CoeffStream& g, const Jet& a, const Jet& c, int n);

// f^(n)([1; n+1] x), so that f(x) = Σ_{k<n} f_k x^k + (xⁿ/n!)·result(x).
CoeffStream taylor_remainder(const CoeffStream& f, int n);

// x^shift · prefactor · body(x^inner).
struct DerivativeForm {
  Complex prefactor;
  Rational shift;
  Rational inner;
  CoeffStream body;
  Jet eval(Complex x, double tol = kSeriesTol) const;
};
// ∂_x x^β f(x^α) = β x^{β−1} f([1+β/α; β/α] x^α). β ≠ 0.
DerivativeForm derivative_rule(Rational beta, Rational alpha, const CoeffStream& f);
// ∂_x^n/n! x^β f(x) = C(β, n) x^{β−n} f([1+β; 1+β−n] x).
DerivativeForm derivative_rule_repeated(Rational beta, int n, const CoeffStream& f);

enum class EulerRep {
  // ∫_0^1 s^{a−1}(1−s)^{c−a−1} f(sx) ds = Γ(c−a)Γ(a)/Γ(c) · f([a; c] x).
  Beta,
  // ∫_0^1 s^{a−1}(1−s^α)^{c−1} f(x s^α(1−s^α)) ds
  //   = Γ(a/α)Γ(c)/(αΓ(c+a/α)) · f([a/α, c; c/2+a/(2α), (1+c)/2+a/(2α)] x/4).
  Quadratic,
};

struct EulerCheck {
  Complex lhs;  // quadrature
  Complex rhs;  // Γ-factor times the hypergeometrized series
  double residual;
};

// Evaluates both sides at the scalar level. The left side integrates the
// stream's closed form when present, else its own series. alpha is used only
// by the Quadratic form.
EulerCheck euler_rep_check(const CoeffStream& f, Complex a, Complex c, Complex x, EulerRep rep = EulerRep::Beta,
                           double alpha = 1.0);

}  // namespace hypint
