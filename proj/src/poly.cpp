#include "bigm1/poly.hpp"

#include <stdexcept>

namespace bigm1 {

namespace {
const Rational kZero(0);
}

Poly::Poly(const Rational& constant) {
  if (!constant.is_zero()) c_.push_back(constant);
}

Poly::Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) {
  strip();
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  strip();
}

void Poly::strip() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& Poly::coeff(unsigned k) const {
  return k < c_.size() ? c_[k] : kZero;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  strip();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  strip();
  return *this;
}

Poly operator-(const Poly& a) {
  Poly r = a;
  for (auto& ck : r.c_) ck = -ck;
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(out));
}

Poly operator*(const Poly& a, const Rational& s) {
  if (s.is_zero()) return {};
  Poly r = a;
  for (auto& ck : r.c_) ck *= s;
  return r;
}

Poly operator/(const Poly& a, const Rational& s) {
  if (s.is_zero()) throw std::domain_error("Poly: division by zero scalar");
  Poly r = a;
  for (auto& ck : r.c_) ck /= s;
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly r{Rational(1)};
  for (unsigned k = 0; k < e; ++k) r = r * *this;
  return r;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> out(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) out[k - 1] = c_[k] * Rational(k);
  return Poly(std::move(out));
}

Poly Poly::reflect() const {
  Poly r = *this;
  for (size_t k = 1; k < r.c_.size(); k += 2) r.c_[k] = -r.c_[k];
  return r;
}

Rational Poly::evaluate(const Rational& x0) const {
  Rational acc(0);
  for (size_t k = c_.size(); k-- > 0;) acc = acc * x0 + c_[k];
  return acc;
}

std::vector<double> Poly::coeffs_double() const {
  std::vector<double> out(c_.size());
  for (size_t k = 0; k < c_.size(); ++k) out[k] = c_[k].to_double();
  return out;
}

std::string Poly::to_string(const char* var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (size_t k = 0; k < c_.size(); ++k) {
    const Rational& ck = c_[k];
    if (ck.is_zero()) continue;
    Rational mag = abs(ck);
    if (out.empty()) {
      if (ck.sign() < 0) out += "-";
    } else {
      out += ck.sign() < 0 ? " - " : " + ";
    }
    bool unit = mag == 1 && k > 0;
    if (!unit) out += mag.to_string();
    if (k > 0) {
      if (!unit) out += "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out.empty() ? "0" : out;
}

Poly compose(const Poly& outer, const Poly& inner) {
  Poly acc;
  for (size_t k = outer.coeffs().size(); k-- > 0;)
    acc = acc * inner + Poly(outer.coeffs()[k]);
  return acc;
}

double horner(const std::vector<double>& coeffs, double x) {
  double acc = 0.0;
  for (size_t k = coeffs.size(); k-- > 0;) acc = acc * x + coeffs[k];
  return acc;
}

}  // namespace bigm1
