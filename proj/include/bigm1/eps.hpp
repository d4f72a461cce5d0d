#pragma once

#include <ostream>

#include "bigm1/poly.hpp"
#include "bigm1/rational.hpp"

namespace bigm1 {

// Polynomial in the formal perturbation variable eps; coefficient k is the
// coefficient of eps^k. Same representation and invariants as Poly.
using EpsPoly = Poly;

// Rational function in eps. Not normalized eagerly; cancellation of common
// eps powers happens only when a limit is taken.
struct EpsRat {
  EpsPoly num;
  EpsPoly den{Rational(1)};
};

EpsRat operator*(const EpsRat& a, const EpsRat& b);
EpsRat operator*(const Rational& s, const EpsRat& a);

// Product of (a + k + s*eps) for k = 0..n-1, expanded in eps. The slope s is
// explicit: a half-parameter perturbed by eps moves with s = 1/2.
EpsPoly pochhammer_eps(const Rational& a, const Rational& slope, unsigned n);

struct EpsLimit {
  long order;        // vanishing order at eps = 0 (negative for a pole)
  Rational leading;  // coefficient of eps^order in the Laurent expansion

  friend bool operator==(const EpsLimit&, const EpsLimit&) = default;
  friend std::ostream& operator<<(std::ostream& os, const EpsLimit& l) {
    return os << "(order " << l.order << ", leading " << l.leading << ")";
  }
};

// Laurent data of r at eps = 0. The identically-zero function is reported
// as {0, 0}. Throws ZeroDenominator when den is the zero polynomial.
EpsLimit eps_limit(const EpsRat& r);

}  // namespace bigm1
