#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hypint/errors.hpp"
#include "hypint/jet.hpp"
#include "hypint/rational.hpp"

namespace hypint {

inline constexpr double kSeriesTol = 1e-12;
inline constexpr std::size_t kTermCap = 1'000'000;

// x^r; exact repeated multiplication for integer r, real pow for x ≥ 0.
Complex rational_power(Complex x, Rational r);

// x ↦ pFq(a; c; γ x^β) with jet-valued parameters.
class PFQSpec {
 public:
  // Throws DomainError when p > q+1, a lower parameter sits at a pole,
  // β = 0, or the jet orders differ.
  PFQSpec(std::vector<Jet> upper, std::vector<Jet> lower, Complex scale = 1.0, Rational power = 1);

  static PFQSpec scalar(const std::vector<Complex>& upper, const std::vector<Complex>& lower,
                        Complex scale = 1.0, Rational power = 1, int order = kDefaultJetOrder);

  const std::vector<Jet>& upper() const { return upper_; }
  const std::vector<Jet>& lower() const { return lower_; }
  Complex scale() const { return scale_; }
  Rational power() const { return power_; }
  int order() const { return order_; }
  std::size_t p() const { return upper_.size(); }
  std::size_t q() const { return lower_.size(); }
  // Σ lower − Σ upper.
  const Jet& sigma() const { return sigma_; }

  // γ x^β.
  Complex argument(Complex x) const;

  PFQSpec with_argument(Complex scale, Rational power) const;
  PFQSpec appended(const std::vector<Jet>& upper, const std::vector<Jet>& lower) const;
  // Drops upper/lower pairs whose jets coincide.
  PFQSpec cancelled() const;
  // Same parameters at a different jet order.
  PFQSpec with_order(int order) const;

  // "2F1(1,1/2;3/2;-x^2)"; the variable name is configurable.
  std::string str(const std::string& var = "x") const;

 private:
  std::vector<Jet> upper_, lower_;
  Complex scale_;
  Rational power_;
  int order_;
  Jet sigma_;
};

enum class SeriesKind { Entire, UnitDisk, Polynomial };

struct ConvergenceClass {
  SeriesKind kind;
  Complex sigma;
};

// (−x)^α pFq(x) → C as x → −∞.
struct AsymptoticTerm {
  Jet exponent;
  Jet coefficient;
};

struct EvalOptions {
  double tol = kSeriesTol;
  std::size_t term_cap = kTermCap;
  // Route 2F1 arguments with Re z < 1/2 and |z| ≥ 0.9 through Pfaff.
  bool allow_pfaff = true;
  // Use Gauss's Γ closed form for 2F1 at 1.
  bool use_gauss = true;
};

const char* kind_name(SeriesKind kind);
ConvergenceClass classify(const PFQSpec& spec);

// Value of the series at argument γx^β.
Jet eval(const PFQSpec& spec, Complex x, double tol = kSeriesTol);
Jet eval(const PFQSpec& spec, Complex x, const EvalOptions& opts);
// Value at series argument z, ignoring the spec's scale and power.
Jet eval_series(const PFQSpec& spec, Complex z, const EvalOptions& opts = {});

Jet value_at_zero(const PFQSpec& spec);

AsymptoticTerm limit_at_minus_infinity(const PFQSpec& spec);

// Series value at argument 1 (scale and power ignored). Requires p = q+1
// and Re σ > 0 unless the series terminates.
Jet eval_at_one(const PFQSpec& spec, double tol = kSeriesTol);
Jet eval_at_one(const PFQSpec& spec, const EvalOptions& opts);

// k-th series coefficient ∏(a_i)_k / (∏(c_j)_k k!).
Jet series_coefficient(const PFQSpec& spec, int k);

// Index of a scalar non-positive-integer upper parameter, or −1.
int terminating_index(const PFQSpec& spec);

}  // namespace hypint
