#include "doctest.h"

#include "bigm1/errors.hpp"
#include "bigm1/hyper.hpp"
#include "bigm1/recurrence.hpp"
#include "test_util.hpp"

using namespace bigm1;

TEST_CASE("terminating 2F1 series") {
  CHECK(hyp2f1_poly(0, Rational(5), Rational(1, 3)) == Poly(Rational(1)));
  // 1 + (-1)(2)/(1/2) z = 1 - 4z
  CHECK(hyp2f1_poly(1, Rational(2), Rational(1, 2)) ==
        Poly({Rational(1), Rational(-4)}));
  CHECK_THROWS_AS(hyp2f1_poly(1, Rational(2), Rational(0)), LowerParameterDegenerate);
  CHECK_THROWS_AS(hyp2f1_poly(3, Rational(1), Rational(-2)), LowerParameterDegenerate);
}

TEST_CASE("regularized 2F1 base cases reduce to (a)_N (-x)^N") {
  CHECK(hyp2f1_reg(0, 1, Rational(3)) == Poly({Rational(0), Rational(-3)}));
  CHECK(hyp2f1_reg(0, 2, Rational(1, 2)) ==
        Poly({Rational(0), Rational(0), Rational(3, 4)}));
  // n = 1, N = 1, a = 1/2: -x + (3/4) x^2 from both the sum and the product form
  CHECK(hyp2f1_reg(1, 1, Rational(1, 2)) == Poly({Rational(0), Rational(-1), Rational(3, 4)}));
}

TEST_CASE("factorization identity for the regularized series") {
  CHECK(lemma1_check(0, 1, Rational(3)));
  CHECK(lemma1_check(3, 2, Rational(1, 2)));
  CHECK(lemma1_check(5, 3, Rational(7, 3)));
  for (unsigned n = 0; n <= 8; ++n)
    for (unsigned N = 1; N <= 4; ++N)
      for (const Rational& a : {Rational(1, 2), Rational(3, 2), Rational(2), Rational(7, 3)})
        CHECK(lemma1_check(n, N, a));
}

TEST_CASE("hypergeometric construction spot values") {
  const ParamSet std_params(Rational(0), Rational(0), Rational(2));
  CHECK(q_hyper(0, std_params) == Poly(Rational(1)));
  CHECK(q_hyper(1, std_params) == Poly({Rational(1, 2), Rational(1)}));
  CHECK(q_hyper(2, std_params) == Poly({Rational(-9, 4), Rational(1, 2), Rational(1)}));
}

TEST_CASE("printed normalization is monic for even degree but not odd") {
  const ParamSet p(Rational(1, 2), Rational(3, 2), Rational(2));
  for (unsigned n = 0; n <= 8; ++n) {
    // rebuild the bracket = q_hyper / leading, so kappa * bracket has leading
    // kappa * (true leading); compare against 1
    const Poly q = q_hyper(n, p);
    CHECK(q.is_monic());
  }
  // odd-branch discrepancy factor (a+b+2n)/(a+n) at n = 1
  const Rational expected_monic_kappa =
      (Rational(1) + p.c) * (p.alpha + 1) / (p.alpha + p.beta + 2);
  CHECK(kappa(1, p) != expected_monic_kappa);
  CHECK(kappa(1, p) == p.c + 1);
}

namespace {

// The printed representation, rebuilt from primitives so the library's
// normalization choice can be checked against kappa exactly as printed.
Poly bracket_direct(unsigned n, const ParamSet& p) {
  const Rational half(1, 2);
  const Rational zden = 1 - p.c * p.c;
  const Poly z({Rational(1) / zden, Rational(0), Rational(-1) / zden});
  const Poly one_minus_x({Rational(1), Rational(-1)});
  const Rational s = p.alpha + p.beta;
  if (n % 2 == 0) {
    const unsigned m = n / 2;
    Poly out = compose(hyp2f1_poly(m, (Rational(n) + s + 2) * half, (p.alpha + 1) * half), z);
    if (m >= 1)
      out += one_minus_x *
             compose(hyp2f1_poly(m - 1, (Rational(n) + s + 2) * half, (p.alpha + 3) * half), z) *
             (Rational(n) / ((p.c + 1) * (p.alpha + 1)));
    return out;
  }
  const unsigned m = (n - 1) / 2;
  Poly out = compose(hyp2f1_poly(m, (Rational(n) + s + 1) * half, (p.alpha + 1) * half), z);
  out -= one_minus_x *
         compose(hyp2f1_poly(m, (Rational(n) + s + 3) * half, (p.alpha + 3) * half), z) *
         ((s + Rational(n) + 1) / ((Rational(1) + p.c) * (p.alpha + 1)));
  return out;
}

}  // namespace

TEST_CASE("kappa times the printed bracket: monic even, off by (a+b+2n)/(a+n) odd") {
  for (const ParamSet& p : {ParamSet(Rational(1, 2), Rational(3, 2), Rational(2)),
                            ParamSet(Rational(0), Rational(1, 2), Rational(-2))}) {
    const QSeq s = q_seq(9, p);
    for (unsigned n = 1; n <= 9; ++n) {
      const Poly kb = bracket_direct(n, p) * kappa(n, p);
      if (n % 2 == 0) {
        CHECK(kb == s.polys[n]);
      } else {
        const Rational skew =
            (p.alpha + p.beta + 2 * Rational(n)) / (p.alpha + Rational(n));
        CHECK(kb == s.polys[n] * skew);
        CHECK(skew != Rational(1));
      }
    }
  }
}

TEST_CASE("both construction routes agree") {
  for (const Rational& a : {Rational(0), Rational(1, 2), Rational(3, 2)})
    for (const Rational& b : {Rational(0), Rational(1, 2), Rational(3, 2)})
      for (const Rational& c : {Rational(3, 2), Rational(2)}) {
        const ParamSet p(a, b, c);
        const QSeq s = q_seq(12, p);
        for (unsigned n = 0; n <= 12; ++n) CHECK(q_hyper(n, p) == s.polys[n]);
      }
}

TEST_CASE("route agreement is not tied to the quadrature-admissible c range") {
  // the representation is algebraic in c: it must hold inside (-1,1) and
  // below -1 as well
  for (const Rational& c : {Rational(1, 2), Rational(-1, 2), Rational(-2), Rational(-3, 2),
                            Rational(5)}) {
    const ParamSet p(Rational(1, 2), Rational(3, 2), c);
    const QSeq s = q_seq(10, p);
    for (unsigned n = 0; n <= 10; ++n) CHECK(q_hyper(n, p) == s.polys[n]);
  }
}

TEST_CASE("route agreement over random non-degenerate rational parameters") {
  bigm1::testing::Rng rng(2024);
  int done = 0;
  while (done < 25) {
    // alpha, beta > -1 and away from the negative odd integers; c != +-1
    const Rational a = Rational(rng.range(-3, 16), 4);
    const Rational b = Rational(rng.range(-3, 16), 4);
    const Rational c = Rational(rng.range(-12, 12), 5);
    if (a <= Rational(-1) || b <= Rational(-1) || c == 1 || c == -1) continue;
    const ParamSet p(a, b, c);
    const QSeq s = q_seq(10, p);
    bool route_ok = true;
    try {
      for (unsigned n = 0; n <= 10; ++n) route_ok = route_ok && q_hyper(n, p) == s.polys[n];
    } catch (const DegenerateParams&) {
      continue;  // alpha hit a half-degenerate value; the recurrence is the arbiter there
    }
    CHECK(route_ok);
    ++done;
  }
}

TEST_CASE("hypergeometric route refuses degenerate lower parameters") {
  // alpha = -1: (alpha+1)/2 = 0 is a non-positive integer lower parameter
  CHECK_THROWS_AS(q_hyper(1, ParamSet(Rational(-1), Rational(1, 2), Rational(2))),
                  DegenerateParams);
  CHECK_THROWS_AS(q_hyper(4, ParamSet(Rational(-3), Rational(1, 2), Rational(2))),
                  DegenerateParams);
}
