#include "bigm1/degenerate.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "bigm1/errors.hpp"

namespace bigm1 {

DegenerateCase DegenerateCase::alpha_odd(unsigned N, const Rational& beta,
                                         const Rational& c) {
  return {DegKind::AlphaOdd, N, ParamSet(Rational(-static_cast<long>(2 * N + 1)), beta, c)};
}

DegenerateCase DegenerateCase::beta_odd(unsigned N, const Rational& alpha,
                                        const Rational& c) {
  return {DegKind::BetaOdd, N, ParamSet(alpha, Rational(-static_cast<long>(2 * N + 1)), c)};
}

ParamSet DegenerateCase::flipped() const {
  const Rational flipped_odd(2 * N + 1);
  if (kind == DegKind::AlphaOdd) return ParamSet(flipped_odd, params.beta, -params.c);
  return ParamSet(params.alpha, flipped_odd, -params.c);
}

std::vector<unsigned> detect_degenerate(const ParamSet& p, unsigned nmax) {
  std::vector<unsigned> out;
  for (unsigned n = 1; n <= nmax; ++n)
    if (recurrence_u(n, p).is_zero()) out.push_back(n);
  return out;
}

Poly factor_base(const DegenerateCase& dc) {
  Poly quad, lin;
  if (dc.kind == DegKind::AlphaOdd) {
    quad = Poly({Rational(-1), Rational(0), Rational(1)});
    lin = Poly({Rational(-1), Rational(1)});
  } else {
    quad = Poly({-dc.params.c * dc.params.c, Rational(0), Rational(1)});
    lin = Poly({dc.params.c, Rational(1)});
  }
  return quad.pow(dc.N) * lin;
}

bool factor_check(const DegenerateCase& dc, unsigned m) {
  const unsigned K = dc.vanishing_index();
  const QSeq degen = q_seq(K + m, dc.params);
  const QSeq flip = q_seq(m, dc.flipped());
  Poly rhs = factor_base(dc);
  if (dc.kind == DegKind::AlphaOdd) {
    rhs = rhs * flip.polys[m].reflect();
    if (m % 2 == 1) rhs = -rhs;
  } else {
    rhs = rhs * flip.polys[m];
  }
  return degen.polys[K + m] == rhs;
}

bool lemma2_check(const DegenerateCase& dc, unsigned n) {
  const unsigned K = dc.vanishing_index();
  const ParamSet flip = dc.flipped();
  const Rational b_shift = recurrence_b(n + K, dc.params);
  const Rational b_flip = recurrence_b(n, flip);
  const bool b_ok =
      dc.kind == DegKind::AlphaOdd ? b_shift == -b_flip : b_shift == b_flip;
  return b_ok && recurrence_u(n + K, dc.params) == recurrence_u(n, flip);
}

std::vector<Rational> basis_expand(const Poly& p, std::span<const Poly> basis) {
  const int d = p.degree();
  if (d < 0) return {};
  if (basis.size() < static_cast<size_t>(d) + 1)
    throw BasisIncomplete("basis_expand: basis covers degrees up to " +
                          std::to_string(static_cast<int>(basis.size()) - 1) +
                          " but the polynomial has degree " + std::to_string(d));
  for (int k = 0; k <= d; ++k)
    if (basis[k].degree() != k || !basis[k].is_monic())
      throw std::invalid_argument("basis_expand: basis[" + std::to_string(k) +
                                  "] is not monic of degree " + std::to_string(k));
  std::vector<Rational> c(d + 1, Rational(0));
  Poly r = p;
  for (int k = d; k >= 0; --k) {
    c[k] = r.coeff(k);
    if (!c[k].is_zero()) r -= basis[k] * c[k];
  }
  return c;
}

Poly tau_power(const Poly& p, const DegenerateCase& dc) {
  if (p.is_zero()) return {};
  const unsigned K = dc.vanishing_index();
  const unsigned d = static_cast<unsigned>(p.degree());
  const QSeq degen = q_seq(d, dc.params);
  const std::vector<Rational> coef = basis_expand(p, degen.polys);
  if (coef.size() <= K) return {};
  const QSeq flip = q_seq(d - K, dc.flipped());
  Poly out;
  for (unsigned m = 0; K + m < coef.size(); ++m) {
    if (coef[K + m].is_zero()) continue;
    const Poly image =
        dc.kind == DegKind::AlphaOdd ? flip.polys[m].reflect() : flip.polys[m];
    out += image * coef[K + m];
  }
  return out;
}

std::vector<Rational> MomentForm::evaluate(const Poly& p) const {
  std::vector<Rational> v;
  for (const Point& pt : points) {
    Poly d = p;
    for (unsigned j = 0; j <= pt.max_order; ++j) {
      v.push_back(d.evaluate(pt.location));
      d = d.derivative();
    }
  }
  return v;
}

Rational MomentForm::apply(const Poly& p, const Poly& q) const {
  const std::vector<Rational> ep = evaluate(p);
  const std::vector<Rational> eq = evaluate(q);
  Rational acc(0);
  for (size_t i = 0; i < ep.size(); ++i) {
    if (ep[i].is_zero()) continue;
    for (size_t j = 0; j < eq.size(); ++j) acc += ep[i] * A[i][j] * eq[j];
  }
  return acc;
}

bool MomentForm::is_diagonal() const {
  for (size_t i = 0; i < A.size(); ++i)
    for (size_t j = 0; j < A.size(); ++j)
      if (i != j && !A[i][j].is_zero()) return false;
  return true;
}

bool MomentForm::is_positive_definite() const {
  // Exact LDL^T-style elimination: positive definite iff every pivot stays
  // positive (equivalent to Sylvester's criterion).
  std::vector<std::vector<Rational>> m = A;
  const size_t n = m.size();
  for (size_t k = 0; k < n; ++k) {
    if (!(m[k][k] > Rational(0))) return false;
    for (size_t i = k + 1; i < n; ++i) {
      const Rational f = m[i][k] / m[k][k];
      for (size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return true;
}

namespace {

// Exact Gauss-Jordan inverse.
std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> m) {
  const size_t n = m.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
  for (size_t i = 0; i < n; ++i) inv[i][i] = Rational(1);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n)
      throw SingularBasisMatrix("moment_form: evaluation matrix is singular");
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    const Rational d = m[col][col];
    for (size_t j = 0; j < n; ++j) {
      m[col][j] /= d;
      inv[col][j] /= d;
    }
    for (size_t row = 0; row < n; ++row) {
      if (row == col || m[row][col].is_zero()) continue;
      const Rational f = m[row][col];
      for (size_t j = 0; j < n; ++j) {
        m[row][j] -= f * m[col][j];
        inv[row][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace

Rational norm_h_degenerate(unsigned n, const DegenerateCase& dc) {
  const EpsLimit lim = eps_limit(norm_h_eps(n, dc.params, dc.perturb()));
  if (lim.order != 0)
    throw Error("norm_h_degenerate: norm limit has unexpected vanishing order " +
                std::to_string(lim.order) + " at n = " + std::to_string(n));
  return lim.leading;
}

MomentForm moment_form(const DegenerateCase& dc) {
  const unsigned K = dc.vanishing_index();
  MomentForm mf;
  if (dc.kind == DegKind::AlphaOdd) {
    mf.points.push_back({Rational(1), dc.N});
    if (dc.N >= 1) mf.points.push_back({Rational(-1), dc.N - 1});
  } else {
    mf.points.push_back({-dc.params.c, dc.N});
    if (dc.N >= 1) mf.points.push_back({dc.params.c, dc.N - 1});
  }

  const QSeq degen = q_seq(K - 1, dc.params);
  std::vector<std::vector<Rational>> v(K, std::vector<Rational>(K, Rational(0)));
  for (unsigned j = 0; j < K; ++j) {
    const std::vector<Rational> col = mf.evaluate(degen.polys[j]);
    for (unsigned i = 0; i < K; ++i) v[i][j] = col[i];
  }
  const std::vector<std::vector<Rational>> vinv = invert(std::move(v));

  std::vector<Rational> diag(K);
  for (unsigned j = 0; j < K; ++j) diag[j] = norm_h_degenerate(j, dc);

  // A = V^{-T} diag V^{-1}; symmetric by construction.
  mf.A.assign(K, std::vector<Rational>(K, Rational(0)));
  for (unsigned i = 0; i < K; ++i)
    for (unsigned j = i; j < K; ++j) {
      Rational acc(0);
      for (unsigned k = 0; k < K; ++k) acc += vinv[k][i] * diag[k] * vinv[k][j];
      mf.A[i][j] = acc;
      mf.A[j][i] = std::move(acc);
    }
  return mf;
}

EpsLimit lambda_N(const DegenerateCase& dc) {
  const EpsRat h = norm_h_eps(dc.vanishing_index(), dc.params, dc.perturb());
  return eps_limit(Rational(1, 2) * h);
}

bool remark2_ratio_check(const DegenerateCase& dc, unsigned j) {
  const unsigned K = dc.vanishing_index();
  if (j < K)
    throw std::invalid_argument("remark2_ratio_check: requires j >= 2N+1");
  const Perturb which = dc.perturb();
  const EpsRat lhs = Rational(1, 2) * (norm_h_eps(K, dc.params, which) *
                                       norm_h_eps(j - K, dc.flipped(), which));
  const EpsRat rhs = norm_h_eps(j, dc.params, which);
  return eps_limit(lhs) == eps_limit(rhs);
}

double bilinear_form(const Poly& p, const Poly& q, const DegenerateCase& dc,
                     const QuadConfig& cfg) {
  const MomentForm mf = moment_form(dc);
  double value = mf.apply(p, q).to_double();
  const Poly tp = tau_power(p, dc);
  const Poly tq = tau_power(q, dc);
  if (!tp.is_zero() && !tq.is_zero()) {
    // u_1/u_2 reflect the variable; for AlphaOdd this cancels the reflection
    // carried by tau_power's images.
    const Poly f = dc.kind == DegKind::AlphaOdd ? tp.reflect() : tp;
    const Poly g = dc.kind == DegKind::AlphaOdd ? tq.reflect() : tq;
    const ParamSet flip = dc.flipped();
    const double mass = functional_u(Poly(Rational(1)), Poly(Rational(1)), flip, cfg);
    const double lam = lambda_N(dc).leading.to_double();
    value += lam * 2.0 * functional_u(f, g, flip, cfg) / mass;
  }
  return value;
}

GramReport gram_degenerate(const DegenerateCase& dc, unsigned nmax,
                           const QuadConfig& cfg, double tol) {
  const unsigned K = dc.vanishing_index();
  const QSeq degen = q_seq(nmax, dc.params);
  const MomentForm mf = moment_form(dc);
  const Rational lam = lambda_N(dc).leading;

  GramReport rep;
  rep.nmax = nmax;
  rep.entries.assign(nmax + 1, std::vector<double>(nmax + 1, 0.0));

  std::vector<std::vector<Rational>> ev(nmax + 1);
  for (unsigned j = 0; j <= nmax; ++j) ev[j] = mf.evaluate(degen.polys[j]);

  const ParamSet flip = dc.flipped();
  std::optional<QSeq> flipseq;
  double mass = 0.0;
  if (nmax >= K) {
    flipseq = q_seq(nmax - K, flip);
    mass = functional_u(Poly(Rational(1)), Poly(Rational(1)), flip, cfg);
  }

  for (unsigned i = 0; i <= nmax; ++i) {
    for (unsigned j = i; j <= nmax; ++j) {
      Rational disc(0);
      for (size_t a = 0; a < ev[i].size(); ++a) {
        if (ev[i][a].is_zero()) continue;
        for (size_t b = 0; b < ev[j].size(); ++b) disc += ev[i][a] * mf.A[a][b] * ev[j][b];
      }
      double value = disc.to_double();
      if (i >= K && j >= K) {
        value += lam.to_double() * 2.0 *
                 functional_u(flipseq->polys[i - K], flipseq->polys[j - K], flip, cfg) / mass;
      }
      rep.entries[i][j] = value;
      rep.entries[j][i] = value;
    }
  }

  rep.expected_diag.reserve(nmax + 1);
  for (unsigned j = 0; j <= nmax; ++j) {
    if (j < K)
      rep.expected_diag.push_back(norm_h_degenerate(j, dc));
    else
      rep.expected_diag.push_back(lam * norm_h(j - K, flip));
  }
  rep.finalize(tol, GramReport::DiagMode::Absolute);
  return rep;
}

}  // namespace bigm1
