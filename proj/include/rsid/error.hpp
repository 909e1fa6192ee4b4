#pragma once

#include <stdexcept>
#include <string>

namespace rsid {

// Base of every error thrown by the library. The CLI maps the subclasses
// below onto process exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "Error"; }
};

#define RSID_DEFINE_ERROR(Name, Base)                                 \
  class Name : public Base {                                          \
   public:                                                            \
    using Base::Base;                                                 \
    const char* kind() const noexcept override { return #Name; }      \
  }

RSID_DEFINE_ERROR(PreconditionError, Error);
RSID_DEFINE_ERROR(NonPrime, PreconditionError);
RSID_DEFINE_ERROR(FieldTooLarge, PreconditionError);
RSID_DEFINE_ERROR(FieldMismatch, PreconditionError);
RSID_DEFINE_ERROR(DimensionMismatch, PreconditionError);
RSID_DEFINE_ERROR(DuplicateNode, PreconditionError);
RSID_DEFINE_ERROR(DivisionByZero, Error);
RSID_DEFINE_ERROR(ZeroPolynomial, Error);
RSID_DEFINE_ERROR(ParseError, Error);
RSID_DEFINE_ERROR(GuardExceeded, Error);
RSID_DEFINE_ERROR(NoBaseCase, Error);
RSID_DEFINE_ERROR(NoGoodPair, Error);
RSID_DEFINE_ERROR(InvariantViolation, Error);
RSID_DEFINE_ERROR(SingularSystem, InvariantViolation);

#undef RSID_DEFINE_ERROR

}  // namespace rsid
