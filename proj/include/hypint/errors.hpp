#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace hypint {

using Complex = std::complex<double>;

// Base of every error the library raises. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Gamma or polygamma requested at a non-positive integer.
class PoleError : public Error {
 public:
  PoleError(Complex location, std::string context);
  Complex location() const { return location_; }
  const std::string& context() const { return context_; }

 private:
  Complex location_;
  std::string context_;
};

// A stated precondition does not hold. `clause` names the failing condition.
class DomainError : public Error {
 public:
  explicit DomainError(std::string clause);
  const std::string& clause() const { return clause_; }

 private:
  std::string clause_;
};

// The series or integral diverges for the requested argument.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

// Summation or quadrature did not settle within its budget.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// Jets of different truncation order were combined.
class OrderMismatch : public Error {
 public:
  OrderMismatch(int lhs, int rhs);
};

// Catalog or function name that is not known.
class UnknownName : public Error {
 public:
  explicit UnknownName(const std::string& name);
};

}  // namespace hypint
