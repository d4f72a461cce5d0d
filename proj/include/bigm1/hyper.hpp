#pragma once

#include "bigm1/params.hpp"
#include "bigm1/poly.hpp"
#include "bigm1/rational.hpp"

namespace bigm1 {

// Terminating Gauss series 2F1(-negdeg, a; low; z) as a polynomial in z:
//   sum_{k=0}^{negdeg} (-negdeg)_k (a)_k / ((low)_k k!) z^k.
// Throws LowerParameterDegenerate if low + k = 0 for some 0 <= k < negdeg.
Poly hyp2f1_poly(unsigned negdeg, const Rational& a, const Rational& low);

// Regularized terminating series (-N+1)_{n+N} 2F1(-n-N, a; -N+1; x) with the
// singular Pochhammers cancelled term by term:
//   sum_{k=0}^{n+N} [(-n-N)_k (a)_k / k!] (-N+k+1)_{n+N-k} x^k.
// Well defined for every n >= 0, N >= 1.
Poly hyp2f1_reg(unsigned n, unsigned N, const Rational& a);

// Exact polynomial identity
//   hyp2f1_reg(n, N, a) == (N+1)_n * hyp2f1_reg(0, N, a) * 2F1(-n, a+N; N+1; x),
// where hyp2f1_reg(0, N, a) = (a)_N (-x)^N.
bool lemma1_check(unsigned n, unsigned N, const Rational& a);

// Monic Q_n via the hypergeometric representation, substituting
// z = (1 - x^2)/(1 - c^2). The bracket is computed exactly and divided by
// its leading coefficient (see kappa for why the printed odd-n constant is
// not used). Throws DegenerateParams when the representation is invalid;
// callers must then use q_seq.
Poly q_hyper(unsigned n, const ParamSet& p);

}  // namespace bigm1
