#include "commands.hpp"

#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bigm1/degenerate.hpp"
#include "bigm1/errors.hpp"
#include "bigm1/gram_report.hpp"
#include "bigm1/hyper.hpp"
#include "bigm1/quadrature.hpp"
#include "bigm1/recurrence.hpp"

namespace bigm1::cli {

namespace {

using nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitNoConvergence = 3;
constexpr int kExitCheckFailed = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational parse_rational(const std::string& flag, const std::string& text) {
  try {
    return Rational::from_string(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(flag) + ": " + e.what() +
                     " (decimals are not accepted; write an exact fraction like 1/2)");
  }
}

// Every run ends with one of these in its JSON output (or on stderr for the
// plain-text and CSV table formats).
ordered_json make_manifest(const std::string& command, ordered_json params,
                           std::optional<long> nmax, std::optional<double> tol,
                           const std::string& outcome,
                           const std::vector<std::string>& artifacts) {
  ordered_json m;
  m["command"] = command;
  m["params"] = std::move(params);
  m["nmax"] = nmax ? ordered_json(*nmax) : ordered_json(nullptr);
  m["tol"] = tol ? ordered_json(format_real(*tol)) : ordered_json(nullptr);
  m["outcome"] = outcome;
  m["artifacts"] = artifacts;
  return m;
}

// Writes to --out when given, stdout otherwise.
void emit(const ordered_json& doc, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << doc.dump(2) << "\n";
  } else {
    std::ofstream f(out_path);
    if (!f) throw UsageError("cannot open output file " + out_path);
    f << doc.dump(2) << "\n";
  }
}

ordered_json poly_coeff_strings(const Poly& p) {
  ordered_json a = ordered_json::array();
  for (const Rational& c : p.coeffs()) a.push_back(c.to_string());
  if (p.is_zero()) a.push_back("0");
  return a;
}

// ---------------------------------------------------------------- table ----

struct TableOpts {
  std::string alpha, beta, c;
  long nmax = 8;
  bool json = false;
  bool csv = false;
  std::string out_path;
};

int cmd_table(const TableOpts& opt, std::ostream& out, std::ostream& err) {
  const Rational alpha = parse_rational("--alpha", opt.alpha);
  const Rational beta = parse_rational("--beta", opt.beta);
  const Rational c = parse_rational("--c", opt.c);
  ordered_json params{{"alpha", alpha.to_string()}, {"beta", beta.to_string()},
                      {"c", c.to_string()}};
  const std::vector<std::string> artifacts =
      opt.out_path.empty() ? std::vector<std::string>{} : std::vector<std::string>{opt.out_path};

  const ParamSet p(alpha, beta, c);
  const unsigned nmax = static_cast<unsigned>(opt.nmax);
  const QSeq seq = q_seq(nmax, p);
  std::vector<Rational> norms;
  for (unsigned n = 0; n <= nmax; ++n) norms.push_back(norm_h(n, p));

  const ordered_json manifest =
      make_manifest("table", params, opt.nmax, std::nullopt, "pass", artifacts);

  if (opt.json) {
    ordered_json doc;
    ordered_json rows = ordered_json::array();
    for (unsigned n = 0; n <= nmax; ++n) {
      ordered_json row;
      row["n"] = n;
      row["b"] = seq.b[n].to_string();
      row["u"] = seq.u[n].to_string();
      row["h_hat"] = norms[n].to_string();
      row["Q"] = poly_coeff_strings(seq.polys[n]);
      rows.push_back(std::move(row));
    }
    doc["rows"] = std::move(rows);
    doc["manifest"] = manifest;
    emit(doc, opt.out_path, out);
    return kExitPass;
  }

  std::ostringstream body;
  if (opt.csv) {
    body << "n,b,u,h_hat,Q\n";
    for (unsigned n = 0; n <= nmax; ++n) {
      body << n << "," << seq.b[n] << "," << seq.u[n] << "," << norms[n] << ",";
      for (size_t k = 0; k < seq.polys[n].coeffs().size(); ++k)
        body << (k ? ";" : "") << seq.polys[n].coeffs()[k];
      body << "\n";
    }
  } else {
    body << std::left << std::setw(4) << "n" << std::setw(14) << "b_n" << std::setw(14)
         << "u_n" << std::setw(16) << "h_hat_n"
         << "Q_n\n";
    for (unsigned n = 0; n <= nmax; ++n)
      body << std::left << std::setw(4) << n << std::setw(14) << seq.b[n].to_string()
           << std::setw(14) << seq.u[n].to_string() << std::setw(16)
           << norms[n].to_string() << seq.polys[n].to_string() << "\n";
  }
  if (opt.out_path.empty()) {
    out << body.str();
  } else {
    std::ofstream f(opt.out_path);
    if (!f) throw UsageError("cannot open output file " + opt.out_path);
    f << body.str();
  }
  err << manifest.dump() << "\n";
  return kExitPass;
}

// --------------------------------------------------------------- verify ----

struct VerifyOpts {
  std::string suite;
  std::string alpha, beta, c;
  std::string kind = "alpha";
  long N = 0;
  long nmax = -1;  // -1: suite default
  long Nmax = 4;
  long mmax = 6;
  long jmax = -1;
  std::vector<std::string> a_values;
  std::string out_path;
};

// The degenerate suites name (kind, N, free parameter, c) instead of raw
// alpha/beta so inconsistent inputs are unrepresentable.
DegenerateCase case_from_opts(const VerifyOpts& opt) {
  const Rational c = parse_rational("--c", opt.c);
  if (opt.N < 0) throw UsageError("--N must be nonnegative");
  const unsigned N = static_cast<unsigned>(opt.N);
  if (opt.kind == "alpha") {
    if (opt.beta.empty()) throw UsageError("--kind alpha requires the free parameter --beta");
    return DegenerateCase::alpha_odd(N, parse_rational("--beta", opt.beta), c);
  }
  if (opt.kind == "beta") {
    if (opt.alpha.empty()) throw UsageError("--kind beta requires the free parameter --alpha");
    return DegenerateCase::beta_odd(N, parse_rational("--alpha", opt.alpha), c);
  }
  throw UsageError("--kind must be alpha or beta");
}

ordered_json degenerate_params_json(const DegenerateCase& dc) {
  return ordered_json{{"kind", dc.kind == DegKind::AlphaOdd ? "alpha" : "beta"},
                      {"N", dc.N},
                      {"alpha", dc.params.alpha.to_string()},
                      {"beta", dc.params.beta.to_string()},
                      {"c", dc.params.c.to_string()}};
}

int finish_verify(const std::string& suite, ordered_json params, std::optional<long> nmax,
                  ordered_json cases, bool all_ok, const VerifyOpts& opt,
                  std::ostream& out) {
  ordered_json doc;
  doc["suite"] = suite;
  doc["cases"] = std::move(cases);
  doc["all_ok"] = all_ok;
  const std::vector<std::string> artifacts =
      opt.out_path.empty() ? std::vector<std::string>{} : std::vector<std::string>{opt.out_path};
  doc["manifest"] = make_manifest("verify --suite " + suite, std::move(params), nmax,
                                  std::nullopt, all_ok ? "pass" : "fail", artifacts);
  emit(doc, opt.out_path, out);
  return all_ok ? kExitPass : kExitCheckFailed;
}

int verify_hyper(const VerifyOpts& opt, std::ostream& out) {
  const Rational alpha = parse_rational("--alpha", opt.alpha);
  const Rational beta = parse_rational("--beta", opt.beta);
  const Rational c = parse_rational("--c", opt.c);
  const ParamSet p(alpha, beta, c);
  const long nmax = opt.nmax < 0 ? 12 : opt.nmax;
  const QSeq seq = q_seq(static_cast<unsigned>(nmax), p);
  ordered_json cases = ordered_json::array();
  bool all_ok = true;
  for (long n = 0; n <= nmax; ++n) {
    const bool ok = q_hyper(static_cast<unsigned>(n), p) == seq.polys[n];
    all_ok = all_ok && ok;
    cases.push_back(ordered_json{{"n", n}, {"ok", ok}});
  }
  ordered_json params{{"alpha", alpha.to_string()}, {"beta", beta.to_string()},
                      {"c", c.to_string()}};
  return finish_verify("hyper", std::move(params), nmax, std::move(cases), all_ok, opt, out);
}

int verify_lemma1(const VerifyOpts& opt, std::ostream& out) {
  const long nmax = opt.nmax < 0 ? 8 : opt.nmax;
  std::vector<std::string> a_texts = opt.a_values;
  if (a_texts.empty()) a_texts = {"1/2", "3/2", "2", "7/3"};
  ordered_json cases = ordered_json::array();
  bool all_ok = true;
  for (long n = 0; n <= nmax; ++n)
    for (long N = 1; N <= opt.Nmax; ++N)
      for (const std::string& at : a_texts) {
        const Rational a = parse_rational("--a", at);
        const bool ok = lemma1_check(static_cast<unsigned>(n), static_cast<unsigned>(N), a);
        all_ok = all_ok && ok;
        cases.push_back(ordered_json{{"n", n}, {"N", N}, {"a", a.to_string()}, {"ok", ok}});
      }
  ordered_json params{{"Nmax", opt.Nmax}};
  return finish_verify("lemma1", std::move(params), nmax, std::move(cases), all_ok, opt, out);
}

int verify_lemma2(const VerifyOpts& opt, std::ostream& out) {
  const DegenerateCase dc = case_from_opts(opt);
  const long nmax = opt.nmax < 0 ? 10 : opt.nmax;
  ordered_json cases = ordered_json::array();
  bool all_ok = true;
  for (long n = 0; n <= nmax; ++n) {
    const bool ok = lemma2_check(dc, static_cast<unsigned>(n));
    all_ok = all_ok && ok;
    cases.push_back(ordered_json{{"n", n}, {"ok", ok}});
  }
  return finish_verify("lemma2", degenerate_params_json(dc), nmax, std::move(cases), all_ok,
                       opt, out);
}

int verify_lemma3(const VerifyOpts& opt, std::ostream& out) {
  const DegenerateCase dc = case_from_opts(opt);
  ordered_json cases = ordered_json::array();
  bool all_ok = true;
  for (long m = 0; m <= opt.mmax; ++m) {
    const bool ok = factor_check(dc, static_cast<unsigned>(m));
    all_ok = all_ok && ok;
    cases.push_back(ordered_json{{"m", m}, {"ok", ok}});
  }
  return finish_verify("lemma3", degenerate_params_json(dc), opt.mmax, std::move(cases),
                       all_ok, opt, out);
}

int verify_norms(const VerifyOpts& opt, std::ostream& out) {
  const Rational alpha = parse_rational("--alpha", opt.alpha);
  const Rational beta = parse_rational("--beta", opt.beta);
  const Rational c = parse_rational("--c", opt.c);
  const ParamSet p(alpha, beta, c);
  const long nmax = opt.nmax < 0 ? 12 : opt.nmax;

  // The exact route needs every denominator alive; otherwise fall back to the
  // eps identity, perturbing whichever parameter is a negative odd integer.
  bool exact_ok = true;
  try {
    for (long n = 0; n <= nmax; ++n) norm_h(static_cast<unsigned>(n), p);
  } catch (const DegenerateDenominator&) {
    exact_ok = false;
  }
  std::optional<Perturb> which;
  if (!exact_ok) {
    auto negative_odd = [](const Rational& r) {
      return r.is_integer() && r.sign() < 0 && r.numerator() % 2 != 0;
    };
    if (negative_odd(alpha))
      which = Perturb::Alpha;
    else if (negative_odd(beta))
      which = Perturb::Beta;
    else
      throw DegenerateDenominator(0,
                                  "verify norms: denominators vanish but neither parameter "
                                  "is a negative odd integer");
  }

  ordered_json cases = ordered_json::array();
  bool all_ok = true;
  for (long n = 1; n <= nmax; ++n) {
    const unsigned un = static_cast<unsigned>(n);
    bool ok;
    if (exact_ok) {
      ok = norm_h(un, p) == recurrence_u(un, p) * norm_h(un - 1, p);
    } else {
      const EpsRat lhs = norm_h_eps(un, p, *which);
      const EpsRat rhs = recurrence_u_eps(un, p, *which) * norm_h_eps(un - 1, p, *which);
      ok = eps_limit(lhs) == eps_limit(rhs);
    }
    all_ok = all_ok && ok;
    cases.push_back(
        ordered_json{{"n", n}, {"route", exact_ok ? "exact" : "eps-limit"}, {"ok", ok}});
  }
  ordered_json params{{"alpha", alpha.to_string()}, {"beta", beta.to_string()},
                      {"c", c.to_string()}};
  return finish_verify("norms", std::move(params), nmax, std::move(cases), all_ok, opt, out);
}

int verify_remark2(const VerifyOpts& opt, std::ostream& out) {
  const DegenerateCase dc = case_from_opts(opt);
  const long lo = static_cast<long>(dc.vanishing_index());
  const long jmax = opt.jmax < 0 ? lo + 4 : opt.jmax;
  ordered_json cases = ordered_json::array();
  bool all_ok = true;
  for (long j = lo; j <= jmax; ++j) {
    const bool ok = remark2_ratio_check(dc, static_cast<unsigned>(j));
    all_ok = all_ok && ok;
    cases.push_back(ordered_json{{"j", j}, {"ok", ok}});
  }
  return finish_verify("remark2", degenerate_params_json(dc), jmax, std::move(cases), all_ok,
                       opt, out);
}

// ----------------------------------------------------------------- gram ----

struct GramOpts {
  std::string mode = "standard";
  std::string alpha, beta, c;
  std::string kind = "alpha";
  long N = 0;
  long nmax = -1;
  double tol = 1e-8;
  std::string out_path;
};

int cmd_gram(const GramOpts& opt, std::ostream& out) {
  const QuadConfig cfg{};
  GramReport rep;
  ordered_json params;
  ordered_json moment_diag;  // degenerate mode only
  long nmax;
  if (opt.mode == "standard") {
    const Rational alpha = parse_rational("--alpha", opt.alpha);
    const Rational beta = parse_rational("--beta", opt.beta);
    const Rational c = parse_rational("--c", opt.c);
    nmax = opt.nmax < 0 ? 8 : opt.nmax;
    const ParamSet p(alpha, beta, c);
    rep = gram_quadrature(static_cast<unsigned>(nmax), p, cfg, opt.tol);
    params = ordered_json{{"alpha", alpha.to_string()}, {"beta", beta.to_string()},
                          {"c", c.to_string()}};
  } else if (opt.mode == "degenerate") {
    VerifyOpts vo;
    vo.kind = opt.kind;
    vo.N = opt.N;
    vo.alpha = opt.alpha;
    vo.beta = opt.beta;
    vo.c = opt.c;
    const DegenerateCase dc = case_from_opts(vo);
    nmax = opt.nmax < 0 ? static_cast<long>(dc.vanishing_index()) + 4 : opt.nmax;
    rep = gram_degenerate(dc, static_cast<unsigned>(nmax), cfg, opt.tol);
    params = degenerate_params_json(dc);
    // a diagonal positive discrete form need not exist; report what A is
    const MomentForm mf = moment_form(dc);
    moment_diag = ordered_json{{"diagonal", mf.is_diagonal()},
                               {"positive_definite", mf.is_positive_definite()}};
  } else {
    throw UsageError("--mode must be standard or degenerate");
  }

  ordered_json doc = rep.to_json();
  if (!moment_diag.is_null()) doc["moment_form"] = std::move(moment_diag);
  const std::vector<std::string> artifacts =
      opt.out_path.empty() ? std::vector<std::string>{} : std::vector<std::string>{opt.out_path};
  doc["manifest"] = make_manifest("gram --mode " + opt.mode, std::move(params), nmax, opt.tol,
                                  rep.pass ? "pass" : "fail", artifacts);
  emit(doc, opt.out_path, out);
  return rep.pass ? kExitPass : kExitCheckFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"bigm1: exact construction and orthogonality verification of monic "
               "big -1 Jacobi polynomials"};
  app.require_subcommand(1);

  TableOpts topt;
  CLI::App* table = app.add_subcommand(
      "table", "Print n, b_n, u_n, normalized norms and Q_n coefficients");
  table->add_option("--alpha", topt.alpha, "alpha as an exact fraction P/Q")->required();
  table->add_option("--beta", topt.beta, "beta as an exact fraction P/Q")->required();
  table->add_option("--c", topt.c, "c as an exact fraction P/Q")->required();
  table->add_option("--nmax", topt.nmax, "largest degree to print")->check(CLI::NonNegativeNumber);
  auto* table_json = table->add_flag("--json", topt.json, "emit JSON instead of text");
  table->add_flag("--csv", topt.csv, "emit CSV instead of text")->excludes(table_json);
  table->add_option("--out", topt.out_path, "write output to a file instead of stdout");

  VerifyOpts vopt;
  CLI::App* verify = app.add_subcommand("verify", "Run an exact-identity suite");
  verify->add_option("--suite", vopt.suite, "hyper|lemma1|lemma2|lemma3|norms|remark2")
      ->required();
  verify->add_option("--alpha", vopt.alpha, "alpha (or the free parameter for --kind beta)");
  verify->add_option("--beta", vopt.beta, "beta (or the free parameter for --kind alpha)");
  verify->add_option("--c", vopt.c, "c as an exact fraction P/Q");
  verify->add_option("--kind", vopt.kind, "which parameter is the negative odd integer");
  verify->add_option("--N", vopt.N, "degeneracy index: the parameter equals -(2N+1)");
  verify->add_option("--nmax", vopt.nmax, "largest index to check");
  verify->add_option("--Nmax", vopt.Nmax, "largest N for the lemma1 grid");
  verify->add_option("--mmax", vopt.mmax, "largest cofactor degree for lemma3");
  verify->add_option("--jmax", vopt.jmax, "largest j for remark2");
  verify->add_option("--a", vopt.a_values, "upper parameter values for lemma1 (repeatable)");
  verify->add_option("--out", vopt.out_path, "write the JSON verdict to a file");

  GramOpts gopt;
  CLI::App* gram = app.add_subcommand("gram", "Compute an orthogonality Gram matrix report");
  gram->add_option("--mode", gopt.mode, "standard|degenerate")->required();
  gram->add_option("--alpha", gopt.alpha, "alpha (standard) or free parameter (kind beta)");
  gram->add_option("--beta", gopt.beta, "beta (standard) or free parameter (kind alpha)");
  gram->add_option("--c", gopt.c, "c as an exact fraction P/Q");
  gram->add_option("--kind", gopt.kind, "which parameter is the negative odd integer");
  gram->add_option("--N", gopt.N, "degeneracy index");
  gram->add_option("--nmax", gopt.nmax, "largest degree in the Gram matrix");
  gram->add_option("--tol", gopt.tol, "pass/fail tolerance for the report");
  gram->add_option("--out", gopt.out_path, "write the report JSON to a file");

  try {
    app.parse(argc, const_cast<char**>(argv));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (table->parsed()) return cmd_table(topt, out, err);
    if (verify->parsed()) {
      if (vopt.suite == "hyper") return verify_hyper(vopt, out);
      if (vopt.suite == "lemma1") return verify_lemma1(vopt, out);
      if (vopt.suite == "lemma2") return verify_lemma2(vopt, out);
      if (vopt.suite == "lemma3") return verify_lemma3(vopt, out);
      if (vopt.suite == "norms") return verify_norms(vopt, out);
      if (vopt.suite == "remark2") return verify_remark2(vopt, out);
      throw UsageError("unknown suite " + vopt.suite);
    }
    if (gram->parsed()) return cmd_gram(gopt, out);
    throw UsageError("no subcommand given");
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NoConvergence& e) {
    err << "error: " << e.what() << "\n";
    return kExitNoConvergence;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}

}  // namespace bigm1::cli
