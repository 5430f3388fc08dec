#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypint/jet.hpp"

namespace hypint::cli {

enum class Op { Num, Var, Eps, Pi, Neg, Add, Sub, Mul, Div, Pow, Func, PFQ, Extract };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Number literals are folded at parse time: a real literal divided by a real
// literal becomes one Num, and negation of a Num becomes a negative Num.
struct Expr {
  Op op = Op::Num;
  Complex value = 0.0;     // Num
  std::string name;        // Func
  int k = 0;               // Extract order
  int p = 0, q = 0;        // PFQ: kids = p upper, q lower, then the argument
  std::vector<ExprPtr> kids;
};

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::size_t pos, const std::string& what);
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

inline constexpr std::size_t kMaxInputBytes = 64 * 1024;
inline const std::vector<std::string>& function_names() {
  static const std::vector<std::string> names{"sqrt", "ln", "arctan", "arcsin", "exp"};
  return names;
}

// Throws SyntaxError with the byte offset of the problem.
ExprPtr parse(const std::string& text);
// Canonical form: parse(print(e)) is structurally equal to e.
std::string print(const ExprPtr& e);
bool equal(const ExprPtr& a, const ExprPtr& b);

bool depends_on_x(const ExprPtr& e);
bool depends_on_eps(const ExprPtr& e);
bool has_series(const ExprPtr& e);  // any PFQ or Extract node
int max_extract(const ExprPtr& e);

// Value at x with ε carried to `order`. PFQ nodes go through the series engine.
Jet evaluate(const ExprPtr& e, Complex x, int order);
// The same expression through elementary functions only; nullopt when it has
// a series node or ε. Used as the quadrature oracle's integrand.
std::optional<Complex> evaluate_elementary(const ExprPtr& e, Complex x);

}  // namespace hypint::cli
