#pragma once

#include <stdexcept>
#include <string>

namespace ghl {

// Base of every error raised by the library. Each subclass names one failure
// mode from the public contracts, so callers can catch precisely.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define GHL_DEFINE_ERROR(Name)                      \
  class Name : public Error {                       \
   public:                                          \
    explicit Name(const std::string& what)          \
        : Error(std::string(#Name ": ") + what) {}  \
  };

GHL_DEFINE_ERROR(NotExact)
GHL_DEFINE_ERROR(RealnessViolation)
GHL_DEFINE_ERROR(ZeroParameter)
GHL_DEFINE_ERROR(DomainError)
GHL_DEFINE_ERROR(InvalidParameter)
GHL_DEFINE_ERROR(DegenerateDenominator)
GHL_DEFINE_ERROR(NoConvergence)
GHL_DEFINE_ERROR(BlowUp)
GHL_DEFINE_ERROR(StabilityBudgetExceeded)
GHL_DEFINE_ERROR(DeltaViolation)
GHL_DEFINE_ERROR(GridTooSmall)
GHL_DEFINE_ERROR(ParseError)
GHL_DEFINE_ERROR(GridMismatch)

#undef GHL_DEFINE_ERROR

}  // namespace ghl
