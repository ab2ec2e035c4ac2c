#include "twistrep/matrix.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace twistrep {

VecS vec_add(const VecS& a, const VecS& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  VecS r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

VecS vec_sub(const VecS& a, const VecS& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  VecS r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

VecS vec_scale(const Scalar& c, const VecS& v) {
  VecS r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

bool vec_is_zero(const VecS& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Scalar dot(const VecS& a, const VecS& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  Scalar s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Matrix::Matrix(std::size_t rows, std::size_t cols,
               std::initializer_list<Scalar> entries)
    : rows_(rows), cols_(cols), data_(entries) {
  if (data_.size() != rows * cols)
    throw std::invalid_argument("entry count does not match shape");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::zero(std::size_t rows, std::size_t cols) {
  return Matrix(rows, cols);
}

Matrix Matrix::column(const VecS& v) {
  Matrix m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m.at(i, 0) = v[i];
  return m;
}

std::string Matrix::shape_str() const {
  return std::to_string(rows_) + "x" + std::to_string(cols_);
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix Matrix::block(std::size_t i0, std::size_t j0, std::size_t h,
                     std::size_t w) const {
  if (i0 + h > rows_ || j0 + w > cols_)
    throw std::invalid_argument("block exceeds matrix bounds");
  Matrix b(h, w);
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < w; ++j) b.at(i, j) = at(i0 + i, j0 + j);
  return b;
}

void Matrix::set_block(std::size_t i0, std::size_t j0, const Matrix& b) {
  if (i0 + b.rows() > rows_ || j0 + b.cols() > cols_)
    throw std::invalid_argument("block exceeds matrix bounds");
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) at(i0 + i, j0 + j) = b.at(i, j);
}

VecS Matrix::row_vec(std::size_t i) const {
  VecS v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

VecS Matrix::col_vec(std::size_t j) const {
  VecS v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
    }
  return true;
}

void Matrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

VecS Matrix::apply(const VecS& v) const {
  if (v.size() != cols_)
    throw std::invalid_argument("matrix " + shape_str() +
                                " applied to vector of length " +
                                std::to_string(v.size()));
  VecS r(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Scalar s;
    for (std::size_t j = 0; j < cols_; ++j) s += at(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("cannot multiply " + a.shape_str() + " by " +
                                b.shape_str());
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Scalar& bkj = b.at(k, j);
        if (!bkj.is_zero()) c.at(i, j) += aik * bkj;
      }
    }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("cannot add " + a.shape_str() + " and " +
                                b.shape_str());
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      c.at(i, j) = a.at(i, j) + b.at(i, j);
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("cannot subtract " + b.shape_str() + " from " +
                                a.shape_str());
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      c.at(i, j) = a.at(i, j) - b.at(i, j);
  return c;
}

Matrix operator*(const Scalar& c, const Matrix& a) {
  Matrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = c * a.at(i, j);
  return r;
}

Matrix diag_blocks(const std::vector<Matrix>& blocks) {
  std::size_t n = 0, m = 0;
  for (const auto& b : blocks) {
    n += b.rows();
    m += b.cols();
  }
  Matrix d(n, m);
  std::size_t i = 0, j = 0;
  for (const auto& b : blocks) {
    d.set_block(i, j, b);
    i += b.rows();
    j += b.cols();
  }
  return d;
}

Matrix outer(const VecS& w, const VecS& s) {
  Matrix m(w.size(), s.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) m.at(i, j) = w[i] * s[j];
  return m;
}

std::string to_string(const Matrix& a) {
  std::ostringstream os;
  os << a;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Matrix& a) {
  os << "[";
  for (std::size_t i = 0; i < a.rows(); ++i) {
    os << (i == 0 ? "[" : " [");
    for (std::size_t j = 0; j < a.cols(); ++j)
      os << a.at(i, j) << (j + 1 < a.cols() ? ", " : "");
    os << "]" << (i + 1 < a.rows() ? "\n" : "");
  }
  return os << "]";
}

}  // namespace twistrep
