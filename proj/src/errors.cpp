#include "hypint/errors.hpp"

#include <sstream>

namespace hypint {

namespace {

std::string pole_message(Complex z, const std::string& context) {
  std::ostringstream os;
  os << "pole at " << z.real();
  if (z.imag() != 0.0) os << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  if (!context.empty()) os << " in " << context;
  return os.str();
}

}  // namespace

PoleError::PoleError(Complex location, std::string context)
    : Error(pole_message(location, context)), location_(location), context_(std::move(context)) {}

DomainError::DomainError(std::string clause)
    : Error("precondition failed: " + clause), clause_(std::move(clause)) {}

OrderMismatch::OrderMismatch(int lhs, int rhs)
    : Error("jet order mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}

UnknownName::UnknownName(const std::string& name) : Error("unknown name: " + name) {}

}  // namespace hypint
