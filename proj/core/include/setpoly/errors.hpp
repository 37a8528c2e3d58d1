#pragma once

#include <stdexcept>
#include <string>

namespace setpoly {

// Every failure raised by the library derives from Error so callers can
// catch the whole family in one place (the CLI maps them to exit codes).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define SETPOLY_DEFINE_ERROR(Name)          \
  class Name : public Error {               \
   public:                                  \
    using Error::Error;                     \
  };

// finite sets
SETPOLY_DEFINE_ERROR(OverlapError)
SETPOLY_DEFINE_ERROR(NotContainedError)
SETPOLY_DEFINE_ERROR(ArityMismatch)

// set-polynomials and systems
SETPOLY_DEFINE_ERROR(DimensionMismatch)
SETPOLY_DEFINE_ERROR(NotDominatedError)
SETPOLY_DEFINE_ERROR(LengthMismatch)
SETPOLY_DEFINE_ERROR(DegreeTooHigh)
SETPOLY_DEFINE_ERROR(ConstantTermError)
SETPOLY_DEFINE_ERROR(EmptySystem)
SETPOLY_DEFINE_ERROR(MalformedQ)

// colorings
SETPOLY_DEFINE_ERROR(OutOfWindow)
SETPOLY_DEFINE_ERROR(WindowMismatch)

// searches
SETPOLY_DEFINE_ERROR(BudgetExhausted)
SETPOLY_DEFINE_ERROR(SubOracleFailure)
SETPOLY_DEFINE_ERROR(NotFound)
SETPOLY_DEFINE_ERROR(CapTooSmall)
SETPOLY_DEFINE_ERROR(MalformedCertificate)

// applications
SETPOLY_DEFINE_ERROR(DegreeOverflow)
SETPOLY_DEFINE_ERROR(NotHomomorphic)

// abstract polynomial maps
SETPOLY_DEFINE_ERROR(NotPolynomial)
SETPOLY_DEFINE_ERROR(EmptySetError)
SETPOLY_DEFINE_ERROR(TooLarge)

// serialization
SETPOLY_DEFINE_ERROR(ParseError)

#undef SETPOLY_DEFINE_ERROR

}  // namespace setpoly
