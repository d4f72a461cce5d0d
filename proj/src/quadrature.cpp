#include "bigm1/quadrature.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "bigm1/errors.hpp"
#include "bigm1/recurrence.hpp"

namespace bigm1 {

double weight_eval(double x, const ParamSet& p) {
  const double al = p.alpha.to_double();
  const double be = p.beta.to_double();
  const double c = p.c.to_double();
  const double ax = std::fabs(x);
  if (!(c > 1.0) || !(ax > 1.0) || !(ax < c))
    throw DomainError("weight_eval: x outside the open support (1,c) u (-c,-1)");
  const double sgn = x > 0.0 ? 1.0 : -1.0;
  return sgn * (x + 1.0) * (c - x) * std::pow(x * x - 1.0, 0.5 * (al - 1.0)) *
         std::pow(c * c - x * x, 0.5 * (be - 1.0));
}

namespace {

// One tanh-sinh integration over t in (lo, hi). The integrand receives the
// node t together with its distances d1 = t - lo and d2 = hi - t, each
// accurate to full relative precision near its endpoint. u_max bounds the
// node range; nodes whose endpoint distance underflows are skipped, so the
// integrand is only ever evaluated strictly inside (lo, hi).
template <typename F>
double tanh_sinh(F&& f, double lo, double hi, double u_max, const QuadConfig& cfg) {
  const double r = 0.5 * (hi - lo);

  auto contrib = [&](double u) -> double {
    const double y = (M_PI / 2.0) * std::sinh(u);
    const double e = std::exp(-2.0 * std::fabs(y));
    const double near = 2.0 * e / (1.0 + e);  // 1 - tanh|y|
    const double far = 2.0 / (1.0 + e);       // 1 + tanh|y|
    const double d1 = r * (u >= 0.0 ? far : near);
    const double d2 = r * (u >= 0.0 ? near : far);
    if (d1 <= 0.0 || d2 <= 0.0) return 0.0;
    const double sech = 2.0 / (std::exp(y) + std::exp(-y));
    const double w = r * (M_PI / 2.0) * std::cosh(u) * sech * sech;
    if (w <= 0.0) return 0.0;
    return w * f(lo + d1, d1, d2);
  };

  const double h0 = 0.5;
  double h = h0;
  const int k0 = static_cast<int>(std::ceil(u_max / h0));  // cover [-u_max, u_max]
  double sum = 0.0, sum_abs = 0.0;
  for (int k = -k0; k <= k0; ++k) {
    const double v = contrib(k * h0);
    sum += v;
    sum_abs += std::fabs(v);
  }
  double integral = h0 * sum;
  double magnitude = h0 * sum_abs;

  for (int level = 1; level <= cfg.max_levels; ++level) {
    h *= 0.5;
    // The refined grid doubles k0, so u_max/h is even and the nodes new to
    // this level are exactly the odd multiples of h.
    const int kmax = k0 << level;
    double odd = 0.0, odd_abs = 0.0;
    for (int k = -kmax + 1; k <= kmax - 1; k += 2) {
      const double v = contrib(k * h);
      odd += v;
      odd_abs += std::fabs(v);
    }
    const double refined = 0.5 * integral + h * odd;
    const double err = std::fabs(refined - integral);
    integral = refined;
    magnitude = 0.5 * magnitude + h * odd_abs;
    // Differences below the roundoff floor of the node sums carry no
    // information; near-zero integrals stop there.
    const double floor = 32.0 * std::numeric_limits<double>::epsilon() * magnitude;
    if (level >= 2 &&
        err <= std::max({cfg.abs_tol, cfg.rel_tol * std::fabs(integral), floor}))
      return integral;
  }
  throw NoConvergence("tanh_sinh: tolerance not reached within max_levels");
}

}  // namespace

double functional_u(const Poly& p, const Poly& q, const ParamSet& p_set,
                    const QuadConfig& cfg) {
  const double al = p_set.alpha.to_double();
  const double be = p_set.beta.to_double();
  const double c = p_set.c.to_double();
  if (!(c > 1.0)) throw QuadratureDomainError("functional_u: requires c > 1");
  if (!(al > -1.0) || !(be > -1.0))
    throw QuadratureDomainError("functional_u: requires alpha > -1 and beta > -1");
  if (p.is_zero() || q.is_zero()) return 0.0;

  const std::vector<double> pc = p.coeffs_double();
  const std::vector<double> qc = q.coeffs_double();
  const double ea = 0.5 * (al - 1.0);
  const double eb = 0.5 * (be - 1.0);

  // The integrand behaves like s^{min(ea, eb)} at the nearer endpoint, so the
  // discarded tail beyond the last node is ~ d_min^{1+e} with
  // d_min ~ 2r exp(-pi sinh(u_max)). Pick u_max to push that below roundoff;
  // exponents too close to -1 cannot be controlled inside double range.
  const double e_worst = std::min(ea, eb);
  const double needed = 39.0 / ((1.0 + e_worst) * M_PI);
  const double u_max = std::asinh(std::max(25.0, needed));
  if (u_max > 6.0)
    throw NoConvergence(
        "functional_u: endpoint exponent too close to -1 for the node range "
        "(requires alpha, beta somewhat above -7/8)");

  // Fold both branches to t = |x| in (1, c). At x = t the weight's polynomial
  // part is (1+t)(c-t); at x = -t it is (t-1)(c+t); the singular factors
  // (x^2-1)^ea (c^2-x^2)^eb are shared and built from the endpoint distances.
  auto integrand = [&](double t, double d1, double d2) -> double {
    const double sing = std::pow(d1 * (t + 1.0), ea) * std::pow(d2 * (c + t), eb);
    const double pos = horner(pc, t) * horner(qc, t) * (1.0 + t) * d2;
    const double neg = horner(pc, -t) * horner(qc, -t) * d1 * (c + t);
    return (pos + neg) * sing;
  };
  return tanh_sinh(integrand, 1.0, c, u_max, cfg);
}

GramReport gram_quadrature(unsigned nmax, const ParamSet& p, const QuadConfig& cfg,
                           double tol) {
  const QSeq seq = q_seq(nmax, p);
  GramReport rep;
  rep.nmax = nmax;
  rep.entries.assign(nmax + 1, std::vector<double>(nmax + 1, 0.0));
  for (unsigned i = 0; i <= nmax; ++i)
    for (unsigned j = i; j <= nmax; ++j) {
      const double v = functional_u(seq.polys[i], seq.polys[j], p, cfg);
      rep.entries[i][j] = v;
      rep.entries[j][i] = v;
    }
  const Rational h0 = norm_h(0, p);
  rep.expected_diag.reserve(nmax + 1);
  for (unsigned j = 0; j <= nmax; ++j) rep.expected_diag.push_back(norm_h(j, p) / h0);
  rep.finalize(tol, GramReport::DiagMode::Ratio);
  return rep;
}

}  // namespace bigm1
