#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "twistrep/matrix.hpp"

namespace twistrep {

class SingularMatrixError : public std::domain_error {
 public:
  SingularMatrixError(std::size_t rank, std::size_t n)
      : std::domain_error("singular matrix: rank " + std::to_string(rank) +
                          " of " + std::to_string(n)),
        rank_(rank) {}
  std::size_t rank() const { return rank_; }

 private:
  std::size_t rank_;
};

/*
 * Row echelon form from fraction-free (Bareiss) elimination with column
 * pivoting. Rows are first scaled to clear denominators, so all intermediate
 * entries are Gaussian integers; every division is exact.
 */
struct Echelon {
  Matrix mat;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank() const { return pivot_cols.size(); }
};

Echelon fraction_free_echelon(Matrix a);

std::size_t rank(const Matrix& a);

// basis of ker(a); size = cols - rank, free columns in ascending order
std::vector<VecS> kernel_basis(const Matrix& a);

// exact description of the solution set of a x = b
struct LinearSolution {
  bool feasible = false;
  VecS particular;             // empty when infeasible
  std::vector<VecS> nullspace;  // basis of ker(a)
};

LinearSolution solve_linear(const Matrix& a, const VecS& b);

Matrix inverse(const Matrix& a);  // throws SingularMatrixError carrying rank

// integer power; negative exponents invert first
Matrix mat_pow(const Matrix& a, long e);

/*
 * Monic characteristic polynomial det(xI - a), exact coefficients,
 * lowest degree first (length n+1). Faddeev-LeVerrier recurrence; the only
 * divisions are by the integers 1..n.
 */
std::vector<Scalar> char_poly(const Matrix& a);

Scalar det(const Matrix& a);

// coefficients of (x-1)^n, lowest degree first
std::vector<Scalar> unipotent_char(std::size_t n);

// value p(x) for a dense lowest-first coefficient list
Scalar poly_eval(const std::vector<Scalar>& p, const Scalar& x);

/*
 * Eigen-structure of the eigenvalue 1: characteristic multiplicity and the
 * generalized kernel flag dims d_i = dim ker(M - I)^i, i = 1..mult.
 */
struct EigenReport {
  std::size_t dimension = 0;
  std::vector<Scalar> char_poly;  // monic, lowest degree first
  std::size_t mult_of_one = 0;
  std::size_t eigenspace_dim_one = 0;
  std::vector<std::size_t> gen_kernel_dims;

  // char_poly == (x-1)^n, the exact predicate for "exactly one eigenvalue 1"
  bool unique_eigenvalue_one() const;
};

EigenReport eigen_report(const Matrix& a);

/*
 * Linear system whose unknown is a rows x cols matrix Z, assembled from
 * equations of the shapes Z M = M Z, Z M = Z, M Z = Z. The solution space
 * comes back as kernel vectors in row-major vec(Z) order.
 */
class MatrixEquationSystem {
 public:
  MatrixEquationSystem(std::size_t rows, std::size_t cols);

  void add_commute(const Matrix& m);         // Z m - m Z = 0
  void add_right_identity(const Matrix& m);  // Z m - Z = 0
  void add_left_identity(const Matrix& m);   // m Z - Z = 0

  std::vector<VecS> kernel() const;
  std::size_t solution_dim() const;

 private:
  std::size_t zr_, zc_;
  std::vector<VecS> eq_rows_;
};

// true when the span of the two sets of vec'd matrices coincides
bool same_span(const std::vector<VecS>& a, const std::vector<VecS>& b);

}  // namespace twistrep
