#pragma once

#include <stdexcept>
#include <string>

namespace cy4 {

// Base of every error raised by the library. The CLI maps these to exit code 2
// unless a more specific mapping applies.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define CY4_DEFINE_ERROR(Name)                          \
  class Name : public Error {                           \
   public:                                              \
    explicit Name(const std::string& what) : Error(what) {} \
  }

CY4_DEFINE_ERROR(DivisionByZero);
CY4_DEFINE_ERROR(PoleAtPoint);
CY4_DEFINE_ERROR(ParseError);
CY4_DEFINE_ERROR(OrderMismatch);
CY4_DEFINE_ERROR(NonUnitConstantTerm);
CY4_DEFINE_ERROR(ZeroWeight);
CY4_DEFINE_ERROR(FixedPartNonzero);
CY4_DEFINE_ERROR(NotDivisible);
CY4_DEFINE_ERROR(SingularSystem);
CY4_DEFINE_ERROR(InconsistentSamples);
CY4_DEFINE_ERROR(InvalidChamber);
CY4_DEFINE_ERROR(InvalidInput);

#undef CY4_DEFINE_ERROR

}  // namespace cy4
