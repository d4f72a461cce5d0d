#include "bigm1/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace bigm1 {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

}  // namespace

Rational Rational::from_string(std::string_view s) {
  std::string_view rest = s;
  bool neg = false;
  if (!rest.empty() && (rest.front() == '+' || rest.front() == '-')) {
    neg = rest.front() == '-';
    rest.remove_prefix(1);
  }
  std::string_view num = rest, den = "1";
  if (auto slash = rest.find('/'); slash != std::string_view::npos) {
    num = rest.substr(0, slash);
    den = rest.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den))
    throw std::invalid_argument("expected a rational like \"p/q\" or \"p\", got \"" +
                                std::string(s) + "\"");
  mpz_class n(std::string(num), 10), d(std::string(den), 10);
  if (d == 0)
    throw std::invalid_argument("zero denominator in \"" + std::string(s) + "\"");
  if (neg) n = -n;
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::to_string() const {
  return v_.get_str(10);
}

Rational abs(const Rational& r) {
  return r.sign() < 0 ? -r : r;
}

Rational pochhammer(const Rational& a, unsigned n) {
  Rational prod(1);
  Rational factor = a;
  for (unsigned k = 0; k < n; ++k) {
    prod *= factor;
    factor += 1;
  }
  return prod;
}

Rational factorial(unsigned n) {
  Rational prod(1);
  for (unsigned k = 2; k <= n; ++k) prod *= Rational(k);
  return prod;
}

Rational rational_pow(const Rational& base, unsigned e) {
  Rational prod(1);
  for (unsigned k = 0; k < e; ++k) prod *= base;
  return prod;
}

}  // namespace bigm1
