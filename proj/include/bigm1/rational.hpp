#pragma once

#include <gmpxx.h>

#include <concepts>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

namespace bigm1 {

// Exact arbitrary-precision rational, always in lowest terms with positive
// denominator. Thin value wrapper around GMP's mpq_class; all arithmetic is
// exact and division by zero throws instead of trapping.
class Rational {
 public:
  Rational() : v_(0) {}

  template <std::integral T>
  Rational(T n) {
    if constexpr (std::is_signed_v<T>)
      v_ = mpq_class(static_cast<long>(n));
    else
      v_ = mpq_class(static_cast<unsigned long>(n));
  }

  Rational(long num, long den);
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  // Parses "p/q" or "p" (optional sign, decimal digits only). Decimal points
  // and exponents are rejected.
  static Rational from_string(std::string_view s);

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  std::string to_string() const;  // "p/q", or "p" when q = 1
  double to_double() const { return v_.get_d(); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) != 0; }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  mpq_class v_;
};

Rational abs(const Rational& r);

// Shifted factorial (a)_n = a (a+1) ... (a+n-1); empty product for n = 0.
Rational pochhammer(const Rational& a, unsigned n);

Rational factorial(unsigned n);

Rational rational_pow(const Rational& base, unsigned e);

}  // namespace bigm1
