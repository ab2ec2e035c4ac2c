#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace twistrep {

/*
 * Exact rational scalar. mpq_class keeps every value canonical:
 * positive denominator, gcd(|numerator|, denominator) = 1.
 */
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

// Accepts "n" or "n/d" with optional signs, unreduced input; normalizes.
Rational rational_from_string(const std::string& text);

std::string to_string(const Rational& q);

/*
 * Gaussian rational a + b*i, the exact field all matrices live over.
 * Equality is exact component-wise equality.
 */
struct Scalar {
  Rational re;
  Rational im;

  Scalar() : re(0), im(0) {}
  Scalar(int n) : re(n), im(0) {}
  Scalar(long n) : re(n), im(0) {}
  Scalar(Rational r) : re(std::move(r)), im(0) {}
  Scalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  bool is_one() const { return re == 1 && im == 0; }

  Scalar conj() const { return Scalar(re, Rational(-im)); }

  // |z|^2 = re^2 + im^2, a rational
  Rational norm() const { return Rational(re * re + im * im); }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar operator-() const { return Scalar(Rational(-re), Rational(-im)); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
};

Scalar operator+(Scalar a, const Scalar& b);
Scalar operator-(Scalar a, const Scalar& b);
Scalar operator*(const Scalar& a, const Scalar& b);
Scalar operator/(const Scalar& a, const Scalar& b);  // throws on division by zero

Scalar inverse(const Scalar& z);  // throws on zero

// Canonical text form: "a/b", "c/d*i", or "a/b+c/d*i" / "a/b-c/d*i";
// integer values drop the "/1".
std::string to_string(const Scalar& z);

// Parses the canonical forms above; accepts unreduced fractions and
// negative denominators, and normalizes. Throws std::invalid_argument.
Scalar scalar_from_string(const std::string& text);

std::ostream& operator<<(std::ostream& os, const Scalar& z);

inline Scalar imaginary_unit() { return Scalar(Rational(0), Rational(1)); }

}  // namespace twistrep
