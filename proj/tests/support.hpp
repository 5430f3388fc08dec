#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "hypint/jet.hpp"

namespace testing_support {

using hypint::Complex;

inline double rel_err(Complex got, Complex want) {
  const double scale = std::max(std::abs(want), 1e-300);
  return std::abs(got - want) / scale;
}

inline double rel_err_floor(Complex got, Complex want, double floor) {
  return std::abs(got - want) / std::max(std::abs(want), floor);
}

// Deterministic generator shared by property tests.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  Complex complex(double lo, double hi) { return {uniform(lo, hi), uniform(lo, hi)}; }
  hypint::Jet jet(int order, double bound) {
    hypint::Jet j(order);
    for (int k = 0; k <= order; ++k) j[k] = complex(-bound, bound);
    return j;
  }

 private:
  std::mt19937_64 rng_;
};

// Catalan's constant (30 digits).
inline constexpr double kCatalan = 0.915965594177219015054603514932;
inline constexpr double kPi = 3.14159265358979323846264338328;
inline constexpr double kLn2 = 0.693147180559945309417232121458;
inline constexpr double kZeta3 = 1.20205690315959428539973816151;

}  // namespace testing_support
