#pragma once

#include <stdexcept>
#include <string>

namespace bigm1 {

// Common base so callers can catch anything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A recurrence or normalization denominator vanished at index `index`.
// Signals a parameter combination the closed formulas do not cover.
struct DegenerateDenominator : Error {
  unsigned index;
  DegenerateDenominator(unsigned n, const std::string& msg)
      : Error(msg + " (at index n=" + std::to_string(n) + ")"), index(n) {}
};

// The denominator of a rational function in eps is identically zero.
struct ZeroDenominator : Error {
  using Error::Error;
};

// A lower-parameter Pochhammer of a terminating 2F1 vanishes.
struct LowerParameterDegenerate : Error {
  using Error::Error;
};

// The hypergeometric construction is invalid for these parameters;
// callers must fall back to the recurrence.
struct DegenerateParams : Error {
  using Error::Error;
};

// A monic basis does not reach the degree of the polynomial to expand.
struct BasisIncomplete : Error {
  using Error::Error;
};

// The evaluation matrix of a moment form is singular. Cannot occur for a
// valid degenerate case; treated as an internal error.
struct SingularBasisMatrix : Error {
  using Error::Error;
};

// Point evaluation outside the open support of the weight.
struct DomainError : Error {
  using Error::Error;
};

// Quadrature preconditions (c > 1, alpha > -1, beta > -1) violated.
struct QuadratureDomainError : Error {
  using Error::Error;
};

// Level-doubling exhausted max_levels without meeting the tolerance.
struct NoConvergence : Error {
  using Error::Error;
};

}  // namespace bigm1
