#pragma once

#include <optional>
#include <string>
#include <vector>

#include "expr.hpp"
#include "hypint/integrate.hpp"

namespace hypint::cli {

// Splits an integrand into a sum of coefficient · x^α · [ε^k] pFq(γx^β) terms.
// Handles sums, constant multiples, powers of x, (k + c·x^β)^r, sqrt, exp,
// arctan, arcsin and ln of monomials or binomials, and explicit pFq factors with
// monomial arguments. Throws DomainError naming the unsupported construct.
std::vector<IntegrandSpec> integrand_terms(const ExprPtr& e, int order);

// Matches a real value against r·B or r0·B0 + r1·B1 for small rationals and a
// fixed basis (π, √π, π/√3, ln 2, Catalan's constant, ζ(3), Γ(1/4)², ...).
// Returns text such as "2π/(3√3)".
std::optional<std::string> recognize_constant(double value, double tol = 1e-12);

}  // namespace hypint::cli
