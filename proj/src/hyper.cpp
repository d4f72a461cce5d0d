#include "bigm1/hyper.hpp"

#include <string>
#include <vector>

#include "bigm1/errors.hpp"

namespace bigm1 {

Poly hyp2f1_poly(unsigned negdeg, const Rational& a, const Rational& low) {
  for (unsigned k = 0; k < negdeg; ++k)
    if ((low + Rational(k)).is_zero())
      throw LowerParameterDegenerate("hyp2f1_poly: lower parameter " + low.to_string() +
                                     " hits a non-positive integer within the series");
  std::vector<Rational> c(negdeg + 1);
  Rational term(1);
  c[0] = term;
  for (unsigned k = 1; k <= negdeg; ++k) {
    const Rational km1(k - 1);
    term *= (km1 - Rational(negdeg)) * (a + km1) / ((low + km1) * Rational(k));
    c[k] = term;
  }
  return Poly(std::move(c));
}

Poly hyp2f1_reg(unsigned n, unsigned N, const Rational& a) {
  const unsigned top = n + N;
  std::vector<Rational> c(top + 1);
  Rational f(1);  // (-n-N)_k (a)_k / k!
  for (unsigned k = 0; k <= top; ++k) {
    if (k > 0) {
      const Rational km1(k - 1);
      f *= (km1 - Rational(top)) * (a + km1) / Rational(k);
    }
    c[k] = f * pochhammer(Rational(1) + Rational(k) - Rational(N), top - k);
  }
  return Poly(std::move(c));
}

bool lemma1_check(unsigned n, unsigned N, const Rational& a) {
  const Poly lhs = hyp2f1_reg(n, N, a);
  const Poly rhs = pochhammer(Rational(N + 1), n) * hyp2f1_reg(0, N, a) *
                   hyp2f1_poly(n, a + Rational(N), Rational(N + 1));
  return lhs == rhs;
}

Poly q_hyper(unsigned n, const ParamSet& p) {
  if (n == 0) return Poly(Rational(1));
  const Rational half(1, 2);
  const Rational zden = 1 - p.c * p.c;  // nonzero by the ParamSet invariant
  const Poly z({Rational(1) / zden, Rational(0), Rational(-1) / zden});
  const Poly one_minus_x({Rational(1), Rational(-1)});
  const Rational s = p.alpha + p.beta;

  try {
    Poly bracket;
    if (n % 2 == 0) {
      const unsigned m = n / 2;
      bracket = compose(hyp2f1_poly(m, (Rational(n) + s + 2) * half, (p.alpha + 1) * half), z);
      if (m >= 1) {
        if (p.alpha == -1)
          throw DegenerateParams("q_hyper: alpha = -1 divides the correction term");
        const Poly s2 =
            compose(hyp2f1_poly(m - 1, (Rational(n) + s + 2) * half, (p.alpha + 3) * half), z);
        bracket += one_minus_x * s2 * (Rational(n) / ((p.c + 1) * (p.alpha + 1)));
      }
    } else {
      const unsigned m = (n - 1) / 2;
      bracket = compose(hyp2f1_poly(m, (Rational(n) + s + 1) * half, (p.alpha + 1) * half), z);
      const Rational cnum = s + Rational(n) + 1;
      if (!cnum.is_zero()) {
        if (p.alpha == -1)
          throw DegenerateParams("q_hyper: alpha = -1 divides the correction term");
        const Poly s2 =
            compose(hyp2f1_poly(m, (Rational(n) + s + 3) * half, (p.alpha + 3) * half), z);
        bracket -= one_minus_x * s2 * (cnum / ((p.c + 1) * (p.alpha + 1)));
      }
    }
    if (bracket.degree() != static_cast<int>(n))
      throw DegenerateParams("q_hyper: bracket degenerated to degree " +
                             std::to_string(bracket.degree()) + " at n = " +
                             std::to_string(n));
    return bracket / bracket.coeff(n);
  } catch (const LowerParameterDegenerate& e) {
    throw DegenerateParams(std::string("q_hyper: hypergeometric route invalid: ") + e.what());
  }
}

}  // namespace bigm1
