#include "twistrep/linalg.hpp"

namespace twistrep {

namespace {

// scale each row by the lcm of its denominators: entries become Gaussian
// integers, and row scaling preserves rank, kernel and solution sets
void clear_denominators(Matrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    mpz_class l(1);
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& z = a.at(i, j);
      mpz_class d1 = z.re.get_den(), d2 = z.im.get_den();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d1.get_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d2.get_mpz_t());
    }
    if (l == 1) continue;
    Scalar c((Rational(l)));
    for (std::size_t j = 0; j < a.cols(); ++j) a.at(i, j) *= c;
  }
}

}  // namespace

Echelon fraction_free_echelon(Matrix a) {
  clear_denominators(a);
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> pivots;
  Scalar prev(1);
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t p = r;
    while (p < rows && a.at(p, col).is_zero()) ++p;
    if (p == rows) continue;  // free column
    a.swap_rows(r, p);
    const Scalar pivot = a.at(r, col);
    for (std::size_t i = r + 1; i < rows; ++i) {
      // Bareiss step: two-term cross product divided by the previous pivot;
      // the quotient is again a Gaussian integer (Sylvester identity)
      const Scalar head = a.at(i, col);
      for (std::size_t j = col + 1; j < cols; ++j)
        a.at(i, j) = (pivot * a.at(i, j) - head * a.at(r, j)) / prev;
      a.at(i, col) = Scalar(0);
    }
    prev = pivot;
    pivots.push_back(col);
    ++r;
  }
  return Echelon{std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& a) { return fraction_free_echelon(a).rank(); }

namespace {

// back-substitute the homogeneous system from an echelon form, one basis
// vector per free column
std::vector<VecS> kernel_from_echelon(const Echelon& e, std::size_t ncols) {
  const auto& piv = e.pivot_cols;
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<VecS> basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    VecS v(ncols, Scalar(0));
    v[f] = Scalar(1);
    for (std::size_t ri = piv.size(); ri-- > 0;) {
      const std::size_t pc = piv[ri];
      if (pc > f) continue;  // entries right of f already fixed at zero
      Scalar s;
      for (std::size_t j = pc + 1; j < ncols; ++j) {
        if (!e.mat.at(ri, j).is_zero() && !v[j].is_zero())
          s += e.mat.at(ri, j) * v[j];
      }
      v[pc] = -s / e.mat.at(ri, pc);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

std::vector<VecS> kernel_basis(const Matrix& a) {
  Echelon e = fraction_free_echelon(a);
  return kernel_from_echelon(e, a.cols());
}

LinearSolution solve_linear(const Matrix& a, const VecS& b) {
  if (a.rows() != b.size())
    throw std::invalid_argument(
        "system " + a.shape_str() + " with right-hand side of length " +
        std::to_string(b.size()));
  const std::size_t n = a.cols();
  Matrix aug(a.rows(), n + 1);
  aug.set_block(0, 0, a);
  for (std::size_t i = 0; i < a.rows(); ++i) aug.at(i, n) = b[i];
  Echelon e = fraction_free_echelon(std::move(aug));

  LinearSolution sol;
  for (auto c : e.pivot_cols)
    if (c == n) return sol;  // pivot in the RHS column: infeasible
  sol.feasible = true;
  sol.particular.assign(n, Scalar(0));
  for (std::size_t ri = e.pivot_cols.size(); ri-- > 0;) {
    const std::size_t pc = e.pivot_cols[ri];
    Scalar s = e.mat.at(ri, n);
    for (std::size_t j = pc + 1; j < n; ++j) {
      if (!e.mat.at(ri, j).is_zero() && !sol.particular[j].is_zero())
        s -= e.mat.at(ri, j) * sol.particular[j];
    }
    sol.particular[pc] = s / e.mat.at(ri, pc);
  }
  // the same echelon restricted to the first n columns is an echelon of a
  Echelon ea{e.mat.block(0, 0, e.mat.rows(), n), e.pivot_cols};
  sol.nullspace = kernel_from_echelon(ea, n);
  return sol;
}

Matrix inverse(const Matrix& a) {
  if (!a.is_square())
    throw std::invalid_argument("cannot invert non-square " + a.shape_str());
  const std::size_t n = a.rows();
  Matrix aug(n, 2 * n);
  aug.set_block(0, 0, a);
  aug.set_block(0, n, Matrix::identity(n));
  Echelon e = fraction_free_echelon(std::move(aug));
  std::size_t rank_a = 0;
  for (auto c : e.pivot_cols)
    if (c < n) ++rank_a;
  if (rank_a < n) throw SingularMatrixError(rank_a, n);

  Matrix inv(n, n);
  for (std::size_t t = 0; t < n; ++t) {
    VecS x(n, Scalar(0));
    for (std::size_t ri = n; ri-- > 0;) {
      const std::size_t pc = e.pivot_cols[ri];  // == ri when a is invertible
      Scalar s = e.mat.at(ri, n + t);
      for (std::size_t j = pc + 1; j < n; ++j)
        if (!e.mat.at(ri, j).is_zero() && !x[j].is_zero())
          s -= e.mat.at(ri, j) * x[j];
      x[pc] = s / e.mat.at(ri, pc);
    }
    for (std::size_t i = 0; i < n; ++i) inv.at(i, t) = x[i];
  }
  return inv;
}

Matrix mat_pow(const Matrix& a, long e) {
  if (!a.is_square())
    throw std::invalid_argument("cannot take power of " + a.shape_str());
  Matrix base = e < 0 ? inverse(a) : a;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e)
                          : static_cast<unsigned long>(e);
  Matrix r = Matrix::identity(a.rows());
  while (k > 0) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

std::vector<Scalar> char_poly(const Matrix& a) {
  if (!a.is_square())
    throw std::invalid_argument("characteristic polynomial of non-square " +
                                a.shape_str());
  const std::size_t n = a.rows();
  std::vector<Scalar> c(n + 1);
  c[n] = Scalar(1);
  if (n == 0) return c;
  Matrix m = a;
  for (std::size_t k = 1; k <= n; ++k) {
    if (k > 1) {
      Matrix shifted = m;
      for (std::size_t i = 0; i < n; ++i) shifted.at(i, i) += c[n - k + 1];
      m = a * shifted;
    }
    Scalar tr;
    for (std::size_t i = 0; i < n; ++i) tr += m.at(i, i);
    c[n - k] = -(tr / Scalar(Rational(static_cast<long>(k))));
  }
  return c;
}

Scalar det(const Matrix& a) {
  auto c = char_poly(a);
  // det = (-1)^n char(0)
  return (a.rows() % 2 == 0) ? c[0] : -c[0];
}

std::vector<Scalar> unipotent_char(std::size_t n) {
  std::vector<Scalar> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    mpz_class bin;
    mpz_bin_uiui(bin.get_mpz_t(), n, k);
    if ((n - k) % 2 == 1) bin = -bin;
    c[k] = Scalar(Rational(bin));
  }
  return c;
}

Scalar poly_eval(const std::vector<Scalar>& p, const Scalar& x) {
  Scalar v;
  for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i];
  return v;
}

bool EigenReport::unique_eigenvalue_one() const {
  return char_poly == unipotent_char(dimension);
}

namespace {

// exact synthetic division by (x - 1); valid only when p(1) = 0
std::vector<Scalar> divide_by_x_minus_one(const std::vector<Scalar>& p) {
  std::vector<Scalar> q(p.size() - 1);
  Scalar carry;
  for (std::size_t i = p.size(); i-- > 1;) {
    carry += p[i];
    q[i - 1] = carry;
  }
  return q;
}

}  // namespace

EigenReport eigen_report(const Matrix& a) {
  if (!a.is_square())
    throw std::invalid_argument("eigen report of non-square " + a.shape_str());
  EigenReport r;
  r.dimension = a.rows();
  r.char_poly = char_poly(a);

  std::vector<Scalar> p = r.char_poly;
  while (p.size() > 1 && poly_eval(p, Scalar(1)).is_zero()) {
    p = divide_by_x_minus_one(p);
    ++r.mult_of_one;
  }

  const Matrix n1 = a - Matrix::identity(a.rows());
  r.eigenspace_dim_one = a.rows() - rank(n1);
  Matrix power = Matrix::identity(a.rows());
  for (std::size_t i = 1; i <= r.mult_of_one; ++i) {
    power = power * n1;
    r.gen_kernel_dims.push_back(a.rows() - rank(power));
  }
  return r;
}

MatrixEquationSystem::MatrixEquationSystem(std::size_t rows, std::size_t cols)
    : zr_(rows), zc_(cols) {}

void MatrixEquationSystem::add_commute(const Matrix& m) {
  if (!m.is_square() || m.rows() != zr_ || zr_ != zc_)
    throw std::invalid_argument("commute equation needs square shapes");
  // entry (r,c): sum_k Z[r][k] m[k][c] - m[r][k] Z[k][c] = 0
  for (std::size_t r = 0; r < zr_; ++r)
    for (std::size_t c = 0; c < zc_; ++c) {
      VecS row(zr_ * zc_, Scalar(0));
      for (std::size_t k = 0; k < zc_; ++k) row[r * zc_ + k] += m.at(k, c);
      for (std::size_t k = 0; k < zr_; ++k) row[k * zc_ + c] -= m.at(r, k);
      eq_rows_.push_back(std::move(row));
    }
}

void MatrixEquationSystem::add_right_identity(const Matrix& m) {
  if (m.rows() != zc_ || m.cols() != zc_)
    throw std::invalid_argument("right factor must be cols x cols");
  for (std::size_t r = 0; r < zr_; ++r)
    for (std::size_t c = 0; c < zc_; ++c) {
      VecS row(zr_ * zc_, Scalar(0));
      for (std::size_t k = 0; k < zc_; ++k) row[r * zc_ + k] += m.at(k, c);
      row[r * zc_ + c] -= Scalar(1);
      eq_rows_.push_back(std::move(row));
    }
}

void MatrixEquationSystem::add_left_identity(const Matrix& m) {
  if (m.rows() != zr_ || m.cols() != zr_)
    throw std::invalid_argument("left factor must be rows x rows");
  for (std::size_t r = 0; r < zr_; ++r)
    for (std::size_t c = 0; c < zc_; ++c) {
      VecS row(zr_ * zc_, Scalar(0));
      for (std::size_t k = 0; k < zr_; ++k) row[k * zc_ + c] += m.at(r, k);
      row[r * zc_ + c] -= Scalar(1);
      eq_rows_.push_back(std::move(row));
    }
}

std::vector<VecS> MatrixEquationSystem::kernel() const {
  Matrix sys(eq_rows_.size(), zr_ * zc_);
  for (std::size_t i = 0; i < eq_rows_.size(); ++i)
    for (std::size_t j = 0; j < zr_ * zc_; ++j) sys.at(i, j) = eq_rows_[i][j];
  return kernel_basis(sys);
}

std::size_t MatrixEquationSystem::solution_dim() const {
  return kernel().size();
}

bool same_span(const std::vector<VecS>& a, const std::vector<VecS>& b) {
  if (a.empty() && b.empty()) return true;
  const std::size_t n = a.empty() ? b[0].size() : a[0].size();
  auto stack = [n](const std::vector<VecS>& v1, const std::vector<VecS>& v2) {
    Matrix m(v1.size() + v2.size(), n);
    std::size_t r = 0;
    for (const auto& v : v1) {
      for (std::size_t j = 0; j < n; ++j) m.at(r, j) = v[j];
      ++r;
    }
    for (const auto& v : v2) {
      for (std::size_t j = 0; j < n; ++j) m.at(r, j) = v[j];
      ++r;
    }
    return m;
  };
  const std::size_t ra = rank(stack(a, {}));
  const std::size_t rb = rank(stack(b, {}));
  return ra == rb && rank(stack(a, b)) == ra;
}

}  // namespace twistrep
