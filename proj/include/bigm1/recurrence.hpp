#pragma once

#include <vector>

#include "bigm1/eps.hpp"
#include "bigm1/params.hpp"
#include "bigm1/poly.hpp"

namespace bigm1 {

// Recurrence coefficients b_n, u_n of
//   x Q_n(x) = Q_{n+1}(x) + b_n Q_n(x) + u_n Q_{n-1}(x),
// with the even/odd parity split:
//   b_n = -c + (c-1) n / (a+b+2n) + (c+1)(b+n+1) / (a+b+2n+2)      n even
//   b_n =  c - (c-1)(n+1) / (a+b+2n+2) - (c+1)(b+n) / (a+b+2n)     n odd
//   u_n = (c-1)^2 n (a+b+n) / (a+b+2n)^2                           n even
//   u_n = (c+1)^2 (a+n)(b+n) / (a+b+2n)^2                          n odd
// A term whose numerator vanishes contributes zero; a surviving term with a
// vanishing denominator throws DegenerateDenominator.
Rational recurrence_b(unsigned n, const ParamSet& p);

// u_0 = 0 by convention, pairing with Q_{-1} = 0.
Rational recurrence_u(unsigned n, const ParamSet& p);

// The monic sequence Q_0..Q_nmax together with the coefficients that built
// it. Immutable after construction.
struct QSeq {
  ParamSet params;
  std::vector<Poly> polys;  // polys[n] monic of degree n
  std::vector<Rational> b;  // b[0..nmax]
  std::vector<Rational> u;  // u[0..nmax], u[0] = 0
};

QSeq q_seq(unsigned nmax, const ParamSet& p);

// Normalization constant of the hypergeometric representation, exactly as
// printed. Note: the odd branch does NOT make the representation monic (the
// bracket's leading coefficient is (a+b+2n)/(a+n)); q_hyper normalizes by
// the actual leading coefficient instead. Exposed separately so the
// discrepancy stays observable.
Rational kappa(unsigned n, const ParamSet& p);

// Normalized norm h_n / <u,1> of Q_n under the continuous functional:
//   n even: 2 (c^2-1)^n (n/2)! ((a+1)/2)_{n/2} ((b+1)/2)_{n/2}
//             / [ ((a+b)/2+1)_n ((a+b+n)/2+1)_{n/2} ]
//   n odd : 2 (c-1)^{n-1} (c+1)^{n+1} ((n-1)/2)! ((a+1)/2)_{(n+1)/2} ((b+1)/2)_{(n+1)/2}
//             / [ ((a+b)/2+1)_n ((a+b+n+1)/2)_{(n+1)/2} ]
// Evaluates to 2 at n = 0; only ratios of successive values are meaningful
// (they satisfy norm_h(n) = u_n * norm_h(n-1)).
Rational norm_h(unsigned n, const ParamSet& p);

enum class Perturb { Alpha, Beta };

// norm_h with the chosen parameter replaced by (value + eps), every
// Pochhammer built with the correct slope (1/2 for half-parameters).
// Vanishing denominators are legal here; take eps_limit of the result.
EpsRat norm_h_eps(unsigned n, const ParamSet& p, Perturb which);

// recurrence_u with the chosen parameter replaced by (value + eps).
EpsRat recurrence_u_eps(unsigned n, const ParamSet& p, Perturb which);

}  // namespace bigm1
