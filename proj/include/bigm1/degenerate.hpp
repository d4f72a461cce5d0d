#pragma once

#include <span>
#include <vector>

#include "bigm1/eps.hpp"
#include "bigm1/gram_report.hpp"
#include "bigm1/params.hpp"
#include "bigm1/poly.hpp"
#include "bigm1/quadrature.hpp"
#include "bigm1/recurrence.hpp"

namespace bigm1 {

enum class DegKind { AlphaOdd, BetaOdd };

// A non-standard parameter set with alpha = -(2N+1) (AlphaOdd) or
// beta = -(2N+1) (BetaOdd), for which u_{2N+1} = 0.
struct DegenerateCase {
  DegKind kind;
  unsigned N;
  ParamSet params;

  static DegenerateCase alpha_odd(unsigned N, const Rational& beta, const Rational& c);
  static DegenerateCase beta_odd(unsigned N, const Rational& alpha, const Rational& c);

  unsigned vanishing_index() const { return 2 * N + 1; }

  // AlphaOdd -> (2N+1, beta, -c); BetaOdd -> (alpha, 2N+1, -c).
  ParamSet flipped() const;

  Perturb perturb() const {
    return kind == DegKind::AlphaOdd ? Perturb::Alpha : Perturb::Beta;
  }
};

// All n in [1, nmax] with u_n = 0.
std::vector<unsigned> detect_degenerate(const ParamSet& p, unsigned nmax);

// The fixed factor of every Q_n with n >= 2N+1:
// AlphaOdd -> (x^2-1)^N (x-1); BetaOdd -> (x^2-c^2)^N (x+c).
Poly factor_base(const DegenerateCase& dc);

// Exact factorization identity
//   AlphaOdd: Q_{2N+1+m}(x; -2N-1,b,c) = (-1)^m (x^2-1)^N (x-1) Q_m(-x; 2N+1,b,-c)
//   BetaOdd : Q_{2N+1+m}(x; a,-2N-1,c) = (x^2-c^2)^N (x+c) Q_m(x; a,2N+1,-c)
// with both sides built from the recurrence.
bool factor_check(const DegenerateCase& dc, unsigned m);

// Coefficient identities behind the factorization:
//   AlphaOdd: b_{n+2N+1}(-2N-1,b,c) = -b_n(2N+1,b,-c),
//             u_{n+2N+1}(-2N-1,b,c) =  u_n(2N+1,b,-c)
//   BetaOdd : b_{n+2N+1}(a,-2N-1,c) =  b_n(a,2N+1,-c),
//             u_{n+2N+1}(a,-2N-1,c) =  u_n(a,2N+1,-c)
bool lemma2_check(const DegenerateCase& dc, unsigned n);

// Coefficients c_k with p = sum c_k basis[k], for a monic basis with
// deg basis[k] = k, by leading-term elimination. Exact.
std::vector<Rational> basis_expand(const Poly& p, std::span<const Poly> basis);

// The composite lowering map tau^{2N+1}: expands p in the degenerate basis
// {Q_j(x; params)}, discards j < 2N+1, and maps Q_{2N+1+m} to
// Q_m(sigma x; flipped) with sigma = -1 for AlphaOdd and +1 for BetaOdd.
// Annihilates every polynomial of degree <= 2N.
Poly tau_power(const Poly& p, const DegenerateCase& dc);

// Discrete bilinear form: symmetric matrix A over derivative evaluations at
// the roots of factor_base, built so that E(Q_i)^T A E(Q_j) = h_i delta_ij
// for i, j <= 2N. Every multiple of Q_{2N+1} is annihilated by E.
struct MomentForm {
  struct Point {
    Rational location;
    unsigned max_order;  // derivatives 0..max_order are evaluated
  };
  std::vector<Point> points;            // total evaluation count = 2N+1
  std::vector<std::vector<Rational>> A; // symmetric, (2N+1) x (2N+1)

  // E(p): derivative evaluations in point-major, order-minor layout.
  std::vector<Rational> evaluate(const Poly& p) const;

  // E(p)^T A E(q), exact.
  Rational apply(const Poly& p, const Poly& q) const;

  // Whether A happens to be diagonal, and positive definite (Sylvester's
  // criterion, exact). A diagonal positive solution need not exist for
  // N >= 1; these are reported, not assumed.
  bool is_diagonal() const;
  bool is_positive_definite() const;
};

MomentForm moment_form(const DegenerateCase& dc);

// Normalized norm at the literal degenerate parameters, as the eps-limit of
// norm_h_eps. Requires vanishing order 0 (true for j <= 2N).
Rational norm_h_degenerate(unsigned n, const DegenerateCase& dc);

// lambda_N = (1/2) h_{2N+1} read as a formal eps-limit: the literal value is
// zero, so the working constant is the leading coefficient at the returned
// vanishing order (1 for generic parameters).
EpsLimit lambda_N(const DegenerateCase& dc);

// Formal-limit identity, checked in vanishing order and leading coefficient:
//   (1/2) h_{2N+1}(degenerate + eps) h_{j-2N-1}(flipped + eps) = h_j(degenerate + eps).
bool remark2_ratio_check(const DegenerateCase& dc, unsigned j);

// Sobolev-type bilinear form
//   <p, q> = E(p)^T A E(q) + lambda * J(tau p, tau q),
// where J is the mass-normalized continuous functional at the flipped
// parameters. The functional reflects its argument's variable for AlphaOdd,
// undoing the reflection that tau_power's images carry.
double bilinear_form(const Poly& p, const Poly& q, const DegenerateCase& dc,
                     const QuadConfig& cfg);

// Gram matrix of Q_0..Q_nmax under the bilinear form. Expected diagonal:
// h_j for j <= 2N (discrete block, exact) and lambda * h_{j-2N-1}(flipped)
// for j >= 2N+1 (continuous block, quadrature).
GramReport gram_degenerate(const DegenerateCase& dc, unsigned nmax,
                           const QuadConfig& cfg, double tol);

}  // namespace bigm1
