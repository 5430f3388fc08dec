#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hypint/pfq.hpp"
#include "hypint/representation.hpp"

namespace hypint {

// 2F1(a,b;c;z) = (1−z)^{−b} 2F1(c−a, b; c; z/(z−1)), with b the upper
// parameter at index `pivot`.
struct PfaffImage {
  PFQSpec spec;
  Complex argument;
  Jet prefactor;
  Jet eval(double tol = kSeriesTol) const;
};
// z is the series argument. Throws DomainError for z ∈ [1, ∞) or a non-2F1 spec.
PfaffImage pfaff(const PFQSpec& spec, Complex z, int pivot = 1);

// 2F1(a, b; 1+a−b; −1) = 2^{−a}Γ(1+a−b)√π / (Γ((1+a)/2)Γ(1+a/2−b)).
Jet kummer_at_minus1(const Jet& a, const Jet& b);
// 2F1(a, 1+a−2b; 1+a−b; 1/2), obtained by applying Pfaff to the value at −1.
Jet sum_at_half(const Jet& a, const Jet& b);

// 3F2 whose value is 2F1(a, b; a+b+1/2; x)².
PFQSpec clausen_square(const Jet& a, const Jet& b);

// ((√(1+x)−1)/x)^β = 2^{−β} 2F1(β/2, (β+1)/2; β+1; −x).
Representation sqrt_power_rep(Complex beta);

// pFq(z) = even(z²) + odd_factor·z·odd(z²), both halves 2pF2q+1.
struct ParitySplit {
  PFQSpec even;
  PFQSpec odd;
  Jet odd_factor;  // ∏a/∏c · γ
  Rational odd_power;  // the original β, so the odd prefactor is γx^β
  Jet eval(Complex x, double tol = kSeriesTol) const;
};
ParitySplit parity_split(const PFQSpec& spec);

// 3F2(1, a/2, (a+1)/2; c/2, (c+1)/2; −x²) = Re 2F1(1, a; c; ix) for real x.
PFQSpec real_part_rep(const Jet& a, const Jet& c);

// 3F2(a1,a2,a3; c1,c2; 1) = Γ(c2)Γ(σ)/(Γ(σ+a3)Γ(c2−a3)) · 3F2(a3, c1−a1, c1−a2; c1, σ+a3; 1).
struct ThomaeImage {
  Jet factor;
  PFQSpec spec;
  Jet eval(double tol = kSeriesTol) const;
};
// Throws DivergenceError unless both sides have positive parameter excess.
ThomaeImage thomae_shift(const Jet& a1, const Jet& a2, const Jet& a3, const Jet& c1, const Jet& c2);

// 2F1(a+ε, b+ε; a+b; ·); its ε-coefficient is ln(1/(1−x))·2F1(a, b; a+b; x).
PFQSpec log_multiplier(Complex a, Complex b, int order = 1);

// 2F1(1, a; a+1; −1) = (a/2)(ψ((a+1)/2) − ψ(a/2)).
Jet sum_unit_a_at_minus1(const Jet& a);
// 2F1(1/2+ε, 1/2+ε; 2; −1) from the differentiated quadratic transform at −1.
Jet sum_half_half_two_at_minus1(const Jet& eps);
// (ab/(1+a−b)) 2F1(a+1, b+1; 2+a−b; −1), the general form behind the previous one.
Jet kummer_derivative_at_minus1(const Jet& a, const Jet& b);

// Root of α yⁿ + y = a as a·(n−1)F(n−2) series; throws DivergenceError when
// the series argument leaves the unit disk.
PFQSpec trinomial_spec(int n, Complex alpha);
Complex trinomial_root(int n, Complex alpha, Complex a);

// A named equality between two evaluators, with a sampler for its domain.
struct Identity {
  using Params = std::vector<Complex>;
  std::string name;
  std::string statement;
  std::string domain;
  std::function<Params(std::mt19937_64&)> sample;
  std::function<Complex(const Params&)> lhs;
  std::function<Complex(const Params&)> rhs;
  Params example;

  // |lhs − rhs| / max(1, |rhs|).
  double residual(const Params& p) const;
};

const std::vector<Identity>& identities();
// Throws UnknownName.
const Identity& identity(const std::string& name);

// Catalog names take integer arguments where noted: "zeta(3)", "ln_pow(2,1/2)".
std::vector<std::string> catalog_names();
// Throws UnknownName or DomainError on malformed arguments.
Representation catalog(const std::string& name);

}  // namespace hypint
