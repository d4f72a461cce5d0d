#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "bigm1/rational.hpp"

namespace bigm1 {

// Result of an orthogonality verification: the matrix of bilinear-form
// values, the exact expected diagonal, and the pass/fail summary.
struct GramReport {
  // Diagonal comparison convention: Absolute checks entries[j][j] against
  // expected_diag[j]; Ratio checks entries[j][j]/entries[0][0] (used when
  // the continuous functional's total mass is only known numerically).
  enum class DiagMode { Absolute, Ratio };

  unsigned nmax = 0;
  std::vector<std::vector<double>> entries;
  std::vector<Rational> expected_diag;
  double max_offdiag_rel = 0.0;
  double max_diag_rel_err = 0.0;
  bool pass = false;

  // Fills the three summary fields from entries/expected_diag.
  void finalize(double tol, DiagMode mode);

  // Fixed-schema, byte-deterministic JSON; reals carry 17 significant digits.
  nlohmann::ordered_json to_json() const;
  std::string to_json_string(int indent = 2) const;
};

// printf("%.17g") as std::string; shared by every JSON emitter.
std::string format_real(double v);

}  // namespace bigm1
