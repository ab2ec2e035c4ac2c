#include "twistrep/scalar.hpp"

#include <ostream>
#include <regex>
#include <stdexcept>

namespace twistrep {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

// -3, 12, 4/6, -4/-6 ...
const std::regex kFractionRe(R"(^([+-]?\d+)(?:/([+-]?\d+))?$)");

}  // namespace

Rational rational_from_string(const std::string& text) {
  std::smatch m;
  if (!std::regex_match(text, m, kFractionRe))
    throw std::invalid_argument("not a rational: '" + text + "'");
  mpz_class num(m[1].str(), 10);
  mpz_class den = m[2].matched ? mpz_class(m[2].str(), 10) : mpz_class(1);
  if (den == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Scalar& Scalar::operator+=(const Scalar& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (im == 0 && o.im == 0) {  // the common all-real case
    re *= o.re;
    return *this;
  }
  Rational r(re * o.re - im * o.im);
  Rational i(re * o.im + im * o.re);
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  *this *= inverse(o);
  return *this;
}

Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar r(a);
  r *= b;
  return r;
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * inverse(b); }

Scalar inverse(const Scalar& z) {
  if (z.is_zero()) throw std::domain_error("division by zero scalar");
  if (z.im == 0) return Scalar(Rational(1 / z.re));
  Rational n = z.norm();
  return Scalar(Rational(z.re / n), Rational(-z.im / n));
}

std::string to_string(const Scalar& z) {
  if (z.im == 0) return to_string(z.re);
  std::string imag = to_string(Rational(abs(z.im))) + "*i";
  if (z.re == 0) return (z.im < 0 ? "-" : "") + imag;
  return to_string(z.re) + (z.im < 0 ? "-" : "+") + imag;
}

namespace {

// "a/b+c/d*i" or "a/b-c/d*i"
const std::regex kComplexRe(
    R"(^([+-]?\d+(?:/[+-]?\d+)?)([+-])(\d+(?:/[+-]?\d+)?)\*i$)");
// "c/d*i"
const std::regex kImagRe(R"(^([+-]?\d+(?:/[+-]?\d+)?)\*i$)");

}  // namespace

Scalar scalar_from_string(const std::string& text) {
  std::smatch m;
  if (std::regex_match(text, m, kComplexRe)) {
    Rational im = rational_from_string(m[3].str());
    if (m[2].str() == "-") im = -im;
    return Scalar(rational_from_string(m[1].str()), std::move(im));
  }
  if (std::regex_match(text, m, kImagRe))
    return Scalar(Rational(0), rational_from_string(m[1].str()));
  return Scalar(rational_from_string(text));  // throws if malformed
}

std::ostream& operator<<(std::ostream& os, const Scalar& z) {
  return os << to_string(z);
}

}  // namespace twistrep
