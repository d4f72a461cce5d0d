#include "bigm1/gram_report.hpp"

#include <cmath>
#include <cstdio>

namespace bigm1 {

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void GramReport::finalize(double tol, DiagMode mode) {
  const size_t dim = entries.size();
  max_offdiag_rel = 0.0;
  max_diag_rel_err = 0.0;
  for (size_t i = 0; i < dim; ++i) {
    for (size_t j = 0; j < dim; ++j) {
      if (i == j) continue;
      const double scale = std::sqrt(std::fabs(entries[i][i] * entries[j][j]));
      const double rel = scale > 0.0 ? std::fabs(entries[i][j]) / scale
                                     : std::fabs(entries[i][j]);
      if (rel > max_offdiag_rel) max_offdiag_rel = rel;
    }
  }
  for (size_t j = 0; j < dim; ++j) {
    const double expected = expected_diag[j].to_double();
    const double measured = mode == DiagMode::Ratio && entries[0][0] != 0.0
                                ? entries[j][j] / entries[0][0]
                                : entries[j][j];
    const double err = expected != 0.0 ? std::fabs(measured - expected) / std::fabs(expected)
                                       : std::fabs(measured);
    if (err > max_diag_rel_err) max_diag_rel_err = err;
  }
  pass = max_offdiag_rel <= tol && max_diag_rel_err <= tol;
}

nlohmann::ordered_json GramReport::to_json() const {
  nlohmann::ordered_json j;
  j["nmax"] = nmax;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : entries)
    for (double v : row) rows.push_back(format_real(v));
  j["entries"] = std::move(rows);
  auto diag = nlohmann::ordered_json::array();
  for (const auto& d : expected_diag) diag.push_back(d.to_string());
  j["expected_diag"] = std::move(diag);
  j["max_offdiag_rel"] = format_real(max_offdiag_rel);
  j["max_diag_rel_err"] = format_real(max_diag_rel_err);
  j["pass"] = pass;
  return j;
}

std::string GramReport::to_json_string(int indent) const {
  return to_json().dump(indent);
}

}  // namespace bigm1
