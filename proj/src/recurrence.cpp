#include "bigm1/recurrence.hpp"

#include "bigm1/errors.hpp"

namespace bigm1 {

namespace {

// Vanishing numerators annihilate the whole term before the denominator is
// inspected; this is what makes n = 0 work when alpha + beta = 0.
Rational frac(const Rational& num, const Rational& den, unsigned n, const char* what) {
  if (num.is_zero()) return Rational(0);
  if (den.is_zero()) throw DegenerateDenominator(n, what);
  return num / den;
}

}  // namespace

Rational recurrence_b(unsigned n, const ParamSet& p) {
  const Rational s = p.alpha + p.beta;
  const Rational nn(n);
  if (n % 2 == 0) {
    return -p.c + frac((p.c - 1) * nn, s + 2 * nn, n, "recurrence_b: a+b+2n vanishes") +
           frac((p.c + 1) * (p.beta + nn + 1), s + 2 * nn + 2, n,
                "recurrence_b: a+b+2n+2 vanishes");
  }
  return p.c - frac((p.c - 1) * (nn + 1), s + 2 * nn + 2, n,
                    "recurrence_b: a+b+2n+2 vanishes") -
         frac((p.c + 1) * (p.beta + nn), s + 2 * nn, n, "recurrence_b: a+b+2n vanishes");
}

Rational recurrence_u(unsigned n, const ParamSet& p) {
  if (n == 0) return Rational(0);
  const Rational nn(n);
  const Rational den = p.alpha + p.beta + 2 * nn;
  if (n % 2 == 0)
    return frac((p.c - 1) * (p.c - 1) * nn * (p.alpha + p.beta + nn), den * den, n,
                "recurrence_u: a+b+2n vanishes");
  return frac((p.c + 1) * (p.c + 1) * (p.alpha + nn) * (p.beta + nn), den * den, n,
              "recurrence_u: a+b+2n vanishes");
}

QSeq q_seq(unsigned nmax, const ParamSet& p) {
  QSeq s{p, {}, {}, {}};
  s.b.reserve(nmax + 1);
  s.u.reserve(nmax + 1);
  for (unsigned n = 0; n <= nmax; ++n) {
    s.b.push_back(recurrence_b(n, p));
    s.u.push_back(recurrence_u(n, p));
  }
  s.polys.reserve(nmax + 1);
  s.polys.emplace_back(Rational(1));
  for (unsigned n = 0; n < nmax; ++n) {
    Poly next = (Poly::x() - Poly(s.b[n])) * s.polys[n];
    if (n > 0) next -= s.u[n] * s.polys[n - 1];
    s.polys.push_back(std::move(next));
  }
  return s;
}

Rational kappa(unsigned n, const ParamSet& p) {
  const Rational half(1, 2);
  const Rational one_m_c2 = 1 - p.c * p.c;
  Rational num, den;
  if (n % 2 == 0) {
    const unsigned m = n / 2;
    num = rational_pow(one_m_c2, m) * pochhammer((p.alpha + 1) * half, m);
    den = pochhammer((p.alpha + p.beta + Rational(n) + 2) * half, m);
  } else {
    const unsigned m = (n - 1) / 2;
    num = (p.c + 1) * rational_pow(one_m_c2, m) * pochhammer((p.alpha + 1) * half, m);
    den = pochhammer((p.alpha + p.beta + Rational(n) + 1) * half, m);
  }
  if (den.is_zero()) throw DegenerateDenominator(n, "kappa: denominator Pochhammer vanishes");
  return num / den;
}

Rational norm_h(unsigned n, const ParamSet& p) {
  const Rational half(1, 2);
  const Rational s = p.alpha + p.beta;
  Rational num, den;
  if (n % 2 == 0) {
    const unsigned m = n / 2;
    num = Rational(2) * rational_pow(p.c * p.c - 1, n) * factorial(m) *
          pochhammer((p.alpha + 1) * half, m) * pochhammer((p.beta + 1) * half, m);
    den = pochhammer(s * half + 1, n) * pochhammer((s + Rational(n)) * half + 1, m);
  } else {
    const unsigned m = (n + 1) / 2;
    num = Rational(2) * rational_pow(p.c - 1, n - 1) * rational_pow(p.c + 1, n + 1) *
          factorial((n - 1) / 2) * pochhammer((p.alpha + 1) * half, m) *
          pochhammer((p.beta + 1) * half, m);
    den = pochhammer(s * half + 1, n) * pochhammer((s + Rational(n) + 1) * half, m);
  }
  if (den.is_zero()) throw DegenerateDenominator(n, "norm_h: denominator Pochhammer vanishes");
  return num / den;
}

EpsRat norm_h_eps(unsigned n, const ParamSet& p, Perturb which) {
  const Rational half(1, 2);
  const Rational s = p.alpha + p.beta;
  // Slopes under value -> value + eps: half-parameters move by eps/2, and
  // every combined (a+b)-parameter contains the perturbed one.
  const Rational sa = which == Perturb::Alpha ? half : Rational(0);
  const Rational sb = which == Perturb::Beta ? half : Rational(0);
  EpsPoly num, den;
  if (n % 2 == 0) {
    const unsigned m = n / 2;
    num = EpsPoly(Rational(2) * rational_pow(p.c * p.c - 1, n) * factorial(m)) *
          pochhammer_eps((p.alpha + 1) * half, sa, m) *
          pochhammer_eps((p.beta + 1) * half, sb, m);
    den = pochhammer_eps(s * half + 1, half, n) *
          pochhammer_eps((s + Rational(n)) * half + 1, half, m);
  } else {
    const unsigned m = (n + 1) / 2;
    num = EpsPoly(Rational(2) * rational_pow(p.c - 1, n - 1) * rational_pow(p.c + 1, n + 1) *
                  factorial((n - 1) / 2)) *
          pochhammer_eps((p.alpha + 1) * half, sa, m) *
          pochhammer_eps((p.beta + 1) * half, sb, m);
    den = pochhammer_eps(s * half + 1, half, n) *
          pochhammer_eps((s + Rational(n) + 1) * half, half, m);
  }
  return {num, den};
}

EpsRat recurrence_u_eps(unsigned n, const ParamSet& p, Perturb which) {
  if (n == 0) return {EpsPoly(), EpsPoly(Rational(1))};
  const Rational nn(n);
  const EpsPoly den_lin({p.alpha + p.beta + 2 * nn, Rational(1)});
  const EpsPoly den = den_lin * den_lin;
  EpsPoly num;
  if (n % 2 == 0) {
    num = EpsPoly((p.c - 1) * (p.c - 1) * nn) *
          EpsPoly({p.alpha + p.beta + nn, Rational(1)});
  } else {
    const EpsPoly fa({p.alpha + nn, which == Perturb::Alpha ? Rational(1) : Rational(0)});
    const EpsPoly fb({p.beta + nn, which == Perturb::Beta ? Rational(1) : Rational(0)});
    num = EpsPoly((p.c + 1) * (p.c + 1)) * fa * fb;
  }
  return {num, den};
}

}  // namespace bigm1
