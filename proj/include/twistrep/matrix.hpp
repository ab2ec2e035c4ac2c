#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "twistrep/scalar.hpp"

namespace twistrep {

using VecS = std::vector<Scalar>;

// vector helpers
VecS vec_add(const VecS& a, const VecS& b);
VecS vec_sub(const VecS& a, const VecS& b);
VecS vec_scale(const Scalar& c, const VecS& v);
bool vec_is_zero(const VecS& v);
Scalar dot(const VecS& a, const VecS& b);  // plain bilinear sum, no conjugation

/*
 * Dense exact matrix over the Gaussian rationals, row-major.
 */
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols,
         std::initializer_list<Scalar> entries);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols);
  // column vector from entries
  static Matrix column(const VecS& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  std::string shape_str() const;

  Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  Matrix transpose() const;
  Matrix block(std::size_t i0, std::size_t j0, std::size_t h,
               std::size_t w) const;
  void set_block(std::size_t i0, std::size_t j0, const Matrix& b);

  VecS row_vec(std::size_t i) const;
  VecS col_vec(std::size_t j) const;

  bool is_zero() const;
  bool is_identity() const;

  void swap_rows(std::size_t i, std::size_t j);

  VecS apply(const VecS& v) const;  // matrix * column vector

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

// throws std::invalid_argument naming both shapes on dimension mismatch
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Scalar& c, const Matrix& a);

// diag(blocks...) in the given order
Matrix diag_blocks(const std::vector<Matrix>& blocks);

// rank-1 outer product w * t(s) of two column vectors
Matrix outer(const VecS& w, const VecS& s);

std::string to_string(const Matrix& a);
std::ostream& operator<<(std::ostream& os, const Matrix& a);

}  // namespace twistrep
