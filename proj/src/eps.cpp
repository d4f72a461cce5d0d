#include "bigm1/eps.hpp"

#include "bigm1/errors.hpp"

namespace bigm1 {

EpsRat operator*(const EpsRat& a, const EpsRat& b) {
  return {a.num * b.num, a.den * b.den};
}

EpsRat operator*(const Rational& s, const EpsRat& a) {
  return {a.num * s, a.den};
}

EpsPoly pochhammer_eps(const Rational& a, const Rational& slope, unsigned n) {
  EpsPoly prod{Rational(1)};
  for (unsigned k = 0; k < n; ++k) prod = prod * EpsPoly({a + Rational(k), slope});
  return prod;
}

namespace {

// Index of the lowest nonzero coefficient; -1 for the zero polynomial.
long low_order(const EpsPoly& p) {
  const auto& c = p.coeffs();
  for (size_t k = 0; k < c.size(); ++k)
    if (!c[k].is_zero()) return static_cast<long>(k);
  return -1;
}

}  // namespace

EpsLimit eps_limit(const EpsRat& r) {
  long dord = low_order(r.den);
  if (dord < 0) throw ZeroDenominator("eps_limit: denominator is identically zero");
  long nord = low_order(r.num);
  if (nord < 0) return {0, Rational(0)};
  return {nord - dord, r.num.coeff(static_cast<unsigned>(nord)) /
                           r.den.coeff(static_cast<unsigned>(dord))};
}

}  // namespace bigm1
