#pragma once

#include <stdexcept>
#include <string>

namespace zd {

// Base class for every failure the library raises on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define ZD_ERROR_TYPE(NAME)            \
  struct NAME : Error {                \
    using Error::Error;                \
  };

// exact algebra
ZD_ERROR_TYPE(PoleAtSigma)       // a denominator vanishes at the queried sigma
ZD_ERROR_TYPE(DegreeTooHigh)     // cleared comparison exceeds degree 2
ZD_ERROR_TYPE(SignChange)        // a denominator changes sign inside the interval
ZD_ERROR_TYPE(IrrationalRoot)    // quadratic threshold with non-square discriminant
ZD_ERROR_TYPE(Disconnected)      // solution set is not a single interval

// exponent pairs / moments / pipeline
ZD_ERROR_TYPE(BadWord)           // process word with a letter outside {A,B}
ZD_ERROR_TYPE(ZeroA)             // exponent pair with a = 0 has no derived moment
ZD_ERROR_TYPE(Infeasible)        // q <= B + 8/5, no sigma range exists

// numerics
ZD_ERROR_TYPE(PoleAtOne)             // zeta evaluated at s = 1
ZD_ERROR_TYPE(PrecisionLoss)         // imaginary residue above tolerance
ZD_ERROR_TYPE(TableTooSmall)         // coefficient tables do not cover the request
ZD_ERROR_TYPE(QuadratureNotConverged)
ZD_ERROR_TYPE(StepNotConverged)
ZD_ERROR_TYPE(IdentityResidualTooLarge)
ZD_ERROR_TYPE(NoClassIZeros)
ZD_ERROR_TYPE(TooLarge)              // double-sum request above the hard size cap

#undef ZD_ERROR_TYPE

}  // namespace zd
