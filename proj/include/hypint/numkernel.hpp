#pragma once

#include "hypint/errors.hpp"
#include "hypint/jet.hpp"

namespace hypint {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kEulerGamma = 0.57721566490153286061;

// True when z is exactly 0, −1, −2, ...
bool is_nonpositive_integer(Complex z);
// True when z lies within tol of 0, −1, −2, ...
bool near_nonpositive_integer(Complex z, double tol);

// sin(πz) and cos(πz) with the real part reduced exactly, so integer and
// half-integer arguments give exact zeros.
Complex sinpi(Complex z);
Complex cospi(Complex z);

// Lanczos approximation (15 terms), reflection for Re z < 1/2.
Complex cgamma(Complex z);
// 1/Γ(z); entire, returns exact 0 at the poles of Γ.
Complex crgamma(Complex z);
// Principal log Γ; reflection for Re z < 1/2.
Complex clgamma(Complex z);

// ψ^(n)(z): upward recurrence to Re z ≥ 15, then the Stirling-type asymptotic series.
Complex polygamma(int n, Complex z);
inline Complex digamma(Complex z) { return polygamma(0, z); }
inline Complex trigamma(Complex z) { return polygamma(1, z); }

// Γ(z0 + δ) = Γ(z0) exp(Σ_{m≥1} ψ^(m−1)(z0) δ^m / m!).
Jet gamma_jet(const Jet& z);
// 1/Γ as a jet; defined at the poles of Γ.
Jet rgamma_jet(const Jet& z);
// ψ(z0 + δ) = Σ_m ψ^(m)(z0) δ^m / m!.
Jet digamma_jet(const Jet& z);

// Rising factorial (a)_k.
Complex pochhammer(Complex a, int k);
Jet pochhammer(const Jet& a, int k);

// Even Bernoulli numbers B_{2k}, k = 0..10.
double bernoulli_even(int k);

}  // namespace hypint
