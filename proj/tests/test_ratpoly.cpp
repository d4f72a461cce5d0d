#include "doctest.h"

#include <stdexcept>

#include "bigm1/eps.hpp"
#include "bigm1/errors.hpp"
#include "bigm1/poly.hpp"
#include "bigm1/rational.hpp"
#include "test_util.hpp"

using namespace bigm1;

TEST_CASE("Rational stays in lowest terms with positive denominator") {
  Rational r(6, -4);
  CHECK(r == Rational(-3, 2));
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(r.to_string() == "-3/2");
  CHECK(Rational(4, 2).to_string() == "2");
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK((Rational(2, 3) * Rational(9, 4)) == Rational(3, 2));
  CHECK_THROWS_AS(Rational(1, 1) / Rational(0), std::domain_error);
}

TEST_CASE("Rational parsing accepts p/q and p only") {
  CHECK(Rational::from_string("-9/4") == Rational(-9, 4));
  CHECK(Rational::from_string("+3/6") == Rational(1, 2));
  CHECK(Rational::from_string("7") == Rational(7));
  CHECK(Rational::from_string("0") == Rational(0));
  CHECK_THROWS_AS(Rational::from_string("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1e3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1/ 2"), std::invalid_argument);
}

TEST_CASE("pochhammer examples") {
  CHECK(pochhammer(Rational(1, 2), 0) == Rational(1));
  CHECK(pochhammer(Rational(-1), 2) == Rational(0));
  CHECK(pochhammer(Rational(1, 2), 3) == Rational(15, 8));
}

TEST_CASE("pochhammer splits multiplicatively: (a)_{n+m} = (a)_n (a+n)_m") {
  testing::Rng rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const Rational a = rng.rational();
    const unsigned n = static_cast<unsigned>(rng.range(0, 10));
    const unsigned m = static_cast<unsigned>(rng.range(0, 10));
    CHECK(pochhammer(a, n + m) == pochhammer(a, n) * pochhammer(a + Rational(n), m));
  }
}

TEST_CASE("pochhammer_eps examples") {
  CHECK(pochhammer_eps(Rational(1, 2), Rational(1), 1) ==
        EpsPoly({Rational(1, 2), Rational(1)}));
  // (-1 + eps)(eps) = -eps + eps^2
  CHECK(pochhammer_eps(Rational(-1), Rational(1), 2) ==
        EpsPoly({Rational(0), Rational(-1), Rational(1)}));
  CHECK(pochhammer_eps(Rational(0), Rational(1, 2), 1) ==
        EpsPoly({Rational(0), Rational(1, 2)}));
}

TEST_CASE("pochhammer_eps at eps = 0 reduces to pochhammer") {
  testing::Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const Rational a = rng.rational();
    const Rational s = rng.rational(4, 4);
    const unsigned n = static_cast<unsigned>(rng.range(0, 8));
    CHECK(pochhammer_eps(a, s, n).coeff(0) == pochhammer(a, n));
  }
}

TEST_CASE("eps_limit examples") {
  const EpsPoly eps({Rational(0), Rational(1)});
  const EpsPoly one(Rational(1));

  // (eps^2 - eps)/1 -> order 1, leading -1
  CHECK(eps_limit({eps * eps - eps, one}) == EpsLimit{1, Rational(-1)});
  // (2 + eps)/(1 + eps) -> plain evaluation at eps = 0
  CHECK(eps_limit({EpsPoly({Rational(2), Rational(1)}),
                   EpsPoly({Rational(1), Rational(1)})}) == EpsLimit{0, Rational(2)});
  // eps/eps^2 -> simple pole
  CHECK(eps_limit({eps, eps * eps}) == EpsLimit{-1, Rational(1)});
  CHECK_THROWS_AS(eps_limit({one, EpsPoly()}), ZeroDenominator);
  CHECK(eps_limit({EpsPoly(), one}) == EpsLimit{0, Rational(0)});
}

TEST_CASE("eps_limit cancels common eps powers exactly") {
  testing::Rng rng(99);
  const EpsPoly eps({Rational(0), Rational(1)});
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rational> uc, vc;
    for (int i = 0; i < 4; ++i) uc.push_back(rng.rational(6, 4));
    for (int i = 0; i < 4; ++i) vc.push_back(rng.rational(6, 4));
    const EpsPoly u{uc}, v{vc};
    if (v.is_zero()) continue;
    const unsigned k = static_cast<unsigned>(rng.range(0, 3));
    const EpsPoly shift = eps.pow(k);
    CHECK(eps_limit({shift * u, shift * v}) == eps_limit({u, v}));
  }
}

TEST_CASE("polynomial ring basics") {
  const Poly p({Rational(0), Rational(1), Rational(1)});  // x^2 + x
  CHECK(p.reflect() == Poly({Rational(0), Rational(-1), Rational(1)}));
  CHECK(Poly({Rational(-1), Rational(0), Rational(1)}).evaluate(Rational(1)) == Rational(0));
  CHECK(Poly({Rational(0), Rational(0), Rational(0), Rational(1)}).derivative() ==
        Poly({Rational(0), Rational(0), Rational(3)}));
  CHECK(Poly().degree() == -1);
  CHECK((Poly(Rational(1)) - Poly(Rational(1))).is_zero());
}

TEST_CASE("reflect is an involution and evaluation is multiplicative") {
  testing::Rng rng(1234);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rational> pc, qc;
    const int dp = static_cast<int>(rng.range(0, 6));
    const int dq = static_cast<int>(rng.range(0, 6));
    for (int i = 0; i <= dp; ++i) pc.push_back(rng.rational(8, 5));
    for (int i = 0; i <= dq; ++i) qc.push_back(rng.rational(8, 5));
    const Poly p{pc}, q{qc};
    CHECK(p.reflect().reflect() == p);
    const Rational x0 = rng.rational(5, 3);
    CHECK((p * q).evaluate(x0) == p.evaluate(x0) * q.evaluate(x0));
  }
}

TEST_CASE("polynomial pretty printing") {
  CHECK(Poly({Rational(-9, 4), Rational(1, 2), Rational(1)}).to_string() ==
        "-9/4 + 1/2*x + x^2");
  CHECK(Poly({Rational(-1), Rational(1)}).to_string() == "-1 + x");
  CHECK(Poly().to_string() == "0");
  CHECK(Poly({Rational(1), Rational(0), Rational(-1)}).to_string() == "1 - x^2");
}

TEST_CASE("compose substitutes exactly") {
  // (z^2 + 1) with z = x - 1: x^2 - 2x + 2
  const Poly outer({Rational(1), Rational(0), Rational(1)});
  const Poly inner({Rational(-1), Rational(1)});
  CHECK(compose(outer, inner) == Poly({Rational(2), Rational(-2), Rational(1)}));
}
