#pragma once

#include <cstdint>

#include "twistrep/matrix.hpp"

namespace twistrep {

/*
 * splitmix64 stream. Used instead of <random> so that seeded suites produce
 * the same instances on every platform and standard library.
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [lo, hi], inclusive
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(next() %
                                       static_cast<std::uint64_t>(hi - lo + 1));
  }

  bool flip() { return next() & 1; }

  // small rationals keep solver instances readable and fast
  Rational rational(long max_abs = 6, long max_den = 4) {
    return make_rational(range(-max_abs, max_abs), range(1, max_den));
  }

  Rational nonzero_rational(long max_abs = 6, long max_den = 4) {
    for (;;) {
      Rational q = rational(max_abs, max_den);
      if (q != 0) return q;
    }
  }

  Scalar scalar() {
    // mostly real, with an occasional imaginary part
    if (range(0, 3) == 0) return Scalar(rational(), rational());
    return Scalar(rational());
  }

  Scalar nonzero_scalar() {
    for (;;) {
      Scalar z = scalar();
      if (!z.is_zero()) return z;
    }
  }

  VecS vec(std::size_t n) {
    VecS v(n);
    for (auto& x : v) x = scalar();
    return v;
  }

  VecS nonzero_vec(std::size_t n) {
    for (;;) {
      VecS v = vec(n);
      if (!vec_is_zero(v)) return v;
    }
  }

  Matrix matrix(std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = scalar();
    return m;
  }

 private:
  std::uint64_t state_;
};

}  // namespace twistrep
