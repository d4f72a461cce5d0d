#pragma once

#include "bigm1/gram_report.hpp"
#include "bigm1/params.hpp"
#include "bigm1/poly.hpp"

namespace bigm1 {

// Tolerances and refinement depth for the double-exponential rule.
struct QuadConfig {
  double rel_tol = 1e-12;
  double abs_tol = 1e-15;
  int max_levels = 10;
};

// Weight of the continuous functional on (1,c) u (-c,-1):
//   sign(x) (x+1) (c-x) (x^2-1)^{(alpha-1)/2} (c^2-x^2)^{(beta-1)/2}.
// Nonnegative on the open support for real alpha, beta and c > 1.
// Throws DomainError for x outside the open support.
double weight_eval(double x, const ParamSet& p);

// <u, p q>: integral of p(x) q(x) times the weight over both subintervals.
// Each branch is folded to t = |x| in (1, c) and integrated with a
// tanh-sinh transformation; the singular endpoint factors are built from
// the node's exact distances to the endpoints, so integrable singularities
// at |x| = 1 and |x| = c cost no accuracy. Requires c > 1 and
// alpha, beta > -1 (throws QuadratureDomainError), and throws NoConvergence
// when level doubling exhausts cfg.max_levels.
double functional_u(const Poly& p, const Poly& q, const ParamSet& p_set,
                    const QuadConfig& cfg);

// Gram matrix of Q_0..Q_nmax under the continuous functional.
// expected_diag[j] is the exact ratio norm_h(j)/norm_h(0), compared against
// the measured ratio entries[j][j]/entries[0][0]; off-diagonals are measured
// relative to the geometric mean of the adjacent diagonal entries.
GramReport gram_quadrature(unsigned nmax, const ParamSet& p, const QuadConfig& cfg,
                           double tol);

}  // namespace bigm1
