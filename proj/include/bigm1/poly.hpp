#pragma once

#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "bigm1/rational.hpp"

namespace bigm1 {

// Dense univariate polynomial over Rational. Coefficient k is the
// coefficient of x^k; trailing zeros are stripped, so the zero polynomial
// has an empty coefficient list and degree() == -1.
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& constant);
  Poly(std::initializer_list<Rational> coeffs);
  explicit Poly(std::vector<Rational> coeffs);

  static Poly x() { return Poly({Rational(0), Rational(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  // Zero beyond the stored degree.
  const Rational& coeff(unsigned k) const;
  const std::vector<Rational>& coeffs() const { return c_; }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Rational& s);
  friend Poly operator*(const Rational& s, const Poly& a) { return a * s; }
  friend Poly operator/(const Poly& a, const Rational& s);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  Poly pow(unsigned e) const;
  Poly derivative() const;           // formal derivative
  Poly reflect() const;              // p(-x): negate odd-degree coefficients
  Rational evaluate(const Rational& x0) const;

  // Exact coefficients rounded to double, constant term first.
  std::vector<double> coeffs_double() const;

  // Human-readable form in ascending powers, e.g. "-9/4 + 1/2*x + x^2".
  std::string to_string(const char* var = "x") const;

  friend std::ostream& operator<<(std::ostream& os, const Poly& p) {
    return os << p.to_string();
  }

 private:
  void strip();
  std::vector<Rational> c_;
};

// outer(inner(x)) by Horner's scheme on polynomials; exact.
Poly compose(const Poly& outer, const Poly& inner);

// Horner evaluation of double coefficients (constant first).
double horner(const std::vector<double>& coeffs, double x);

}  // namespace bigm1
