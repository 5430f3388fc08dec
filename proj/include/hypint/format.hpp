#pragma once

#include <string>

#include "hypint/errors.hpp"
#include "hypint/jet.hpp"

namespace hypint {

// Short exact-looking rendering: small rationals as "p/q", otherwise the shortest
// round-trip decimal;
// complex values as "a+bi".
std::string format_real(double x);
std::string format_complex(Complex z);
// Jet rendered in ε as "1/2+eps", "1-2*eps^2", ...
std::string format_jet(const Jet& j);

}  // namespace hypint
