#include <doctest.h>

#include "twistrep/linalg.hpp"
#include "twistrep/random.hpp"
#include "twistrep/symplectic.hpp"

using namespace twistrep;

namespace {

Matrix seeded_invertible(Rng& rng, std::size_t n) {
  for (;;) {
    Matrix m = rng.matrix(n, n);
    if (!det(m).is_zero()) return m;
  }
}

std::vector<Scalar> coeffs(std::initializer_list<long> cs) {
  std::vector<Scalar> v;
  for (long c : cs) v.emplace_back(c);
  return v;
}

}  // namespace

TEST_CASE("products of the elementary transvection blocks") {
  const Matrix u = mat_U(), uh = mat_Uhat();
  CHECK(Matrix::identity(2) * u == u);
  CHECK(u * uh == Matrix(2, 2, {Scalar(0), Scalar(1), Scalar(-1), Scalar(1)}));
  const Matrix braid(2, 2, {Scalar(0), Scalar(1), Scalar(-1), Scalar(0)});
  CHECK(u * uh * u == braid);
  CHECK(uh * u * uh == braid);
  CHECK_THROWS_WITH_AS(Matrix(2, 2) * Matrix(3, 2),
                       "cannot multiply 2x2 by 3x2", std::invalid_argument);
}

TEST_CASE("exact inverse") {
  CHECK(inverse(Matrix::identity(3)) == Matrix::identity(3));
  CHECK(inverse(mat_U()) ==
        Matrix(2, 2, {Scalar(1), Scalar(-1), Scalar(0), Scalar(1)}));
  const Matrix sing(2, 2, {Scalar(1), Scalar(2), Scalar(2), Scalar(4)});
  try {
    inverse(sing);
    FAIL("expected SingularMatrixError");
  } catch (const SingularMatrixError& e) {
    CHECK(e.rank() == 1);
  }
}

TEST_CASE("rank and kernels by fraction-free elimination") {
  CHECK(rank(mat_U() - Matrix::identity(2)) == 1);
  CHECK(kernel_basis(Matrix::zero(3, 3)).size() == 3);
  CHECK(rank(mat_L() - Matrix::identity(4)) == 1);
  // a rectangular case with fractions
  Matrix m(2, 3);
  m.at(0, 0) = Scalar(make_rational(1, 2));
  m.at(0, 1) = Scalar(make_rational(1, 3));
  m.at(1, 0) = Scalar(make_rational(3, 2));
  m.at(1, 1) = Scalar(2);
  CHECK(rank(m) == 2);
  const auto kb = kernel_basis(m);
  REQUIRE(kb.size() == 1);
  CHECK(vec_is_zero(m.apply(kb[0])));
}

TEST_CASE("characteristic polynomials, lowest degree first") {
  CHECK(char_poly(mat_U()) == coeffs({1, -2, 1}));  // (x-1)^2
  const Matrix t(2, 2, {Scalar(2), Scalar(1), Scalar(-1), Scalar(0)});
  CHECK(char_poly(t) == coeffs({1, -2, 1}));
  const Matrix d(2, 2, {Scalar(2), Scalar(0), Scalar(0), Scalar(3)});
  CHECK(char_poly(d) == coeffs({6, -5, 1}));  // (x-2)(x-3)
  CHECK(unipotent_char(2) == coeffs({1, -2, 1}));
  CHECK(det(d) == Scalar(6));
  CHECK(det(mat_L()) == Scalar(1));
}

TEST_CASE("eigen reports") {
  SUBCASE("A_1 at genus 2") {
    const auto r = eigen_report(def_A(2, 1));
    CHECK(r.mult_of_one == 4);
    CHECK(r.eigenspace_dim_one == 3);
    CHECK(r.gen_kernel_dims == std::vector<std::size_t>{3, 4, 4, 4});
    CHECK(r.unique_eigenvalue_one());
    CHECK(r.eigenspace_dim_one == r.gen_kernel_dims[0]);
  }
  SUBCASE("identity") {
    const auto r = eigen_report(Matrix::identity(5));
    CHECK(r.mult_of_one == 5);
    CHECK(r.eigenspace_dim_one == 5);
  }
  SUBCASE("chain twist image plus trivial line at genus 2") {
    const Matrix m = diag_blocks({mat_L(), Matrix::identity(1)});
    const auto r = eigen_report(m);
    CHECK(r.unique_eigenvalue_one());
    CHECK(r.eigenspace_dim_one == 4);  // 2g
  }
  SUBCASE("no eigenvalue one") {
    const Matrix d(2, 2, {Scalar(2), Scalar(0), Scalar(0), Scalar(3)});
    const auto r = eigen_report(d);
    CHECK(r.mult_of_one == 0);
    CHECK(r.eigenspace_dim_one == 0);
    CHECK(r.gen_kernel_dims.empty());
  }
}

TEST_CASE("linear solving returns typed solution sets") {
  SUBCASE("unique solution") {
    const auto sol = solve_linear(Matrix::identity(2), {Scalar(1), Scalar(2)});
    REQUIRE(sol.feasible);
    CHECK(sol.particular == VecS{Scalar(1), Scalar(2)});
    CHECK(sol.nullspace.empty());
  }
  SUBCASE("infeasible is a result, not an error") {
    const auto sol = solve_linear(Matrix::zero(2, 2), {Scalar(1), Scalar(0)});
    CHECK_FALSE(sol.feasible);
  }
  SUBCASE("underdetermined") {
    const auto sol =
        solve_linear(mat_U() - Matrix::identity(2), {Scalar(1), Scalar(0)});
    REQUIRE(sol.feasible);
    CHECK(sol.particular == VecS{Scalar(0), Scalar(1)});
    REQUIRE(sol.nullspace.size() == 1);
    CHECK(sol.nullspace[0] == VecS{Scalar(1), Scalar(0)});
  }
  SUBCASE("shape mismatch throws") {
    CHECK_THROWS_AS(solve_linear(Matrix::identity(2), VecS(3)),
                    std::invalid_argument);
  }
}

TEST_CASE("rank-nullity and inverse round trips on seeded matrices") {
  Rng rng(99);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 1 + rng.range(0, 5);
    const Matrix m = rng.matrix(n, n);
    CHECK(rank(m) + kernel_basis(m).size() == n);
    if (!det(m).is_zero()) CHECK(m * inverse(m) == Matrix::identity(n));
  }
}

TEST_CASE("characteristic polynomial is a similarity invariant") {
  Rng rng(4242);
  for (int t = 0; t < 12; ++t) {
    const std::size_t n = 2 + rng.range(0, 6);  // up to 8
    const Matrix m = rng.matrix(n, n);
    const Matrix p = seeded_invertible(rng, n);
    CHECK(char_poly(inverse(p) * m * p) == char_poly(m));
  }
}

TEST_CASE("determinant is multiplicative") {
  Rng rng(7);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 1 + rng.range(0, 4);
    const Matrix a = rng.matrix(n, n), b = rng.matrix(n, n);
    CHECK(det(a * b) == det(a) * det(b));
  }
}

TEST_CASE("generalized kernel dims stabilize at the multiplicity") {
  Rng rng(31337);
  for (int t = 0; t < 10; ++t) {
    const std::size_t n = 2 + rng.range(0, 4);
    // unipotent: I + strictly upper triangular
    Matrix m = Matrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) m.at(i, j) = rng.scalar();
    const auto r = eigen_report(m);
    CHECK(r.mult_of_one == n);
    REQUIRE(!r.gen_kernel_dims.empty());
    CHECK(r.gen_kernel_dims.back() == r.mult_of_one);
    for (std::size_t i = 1; i < r.gen_kernel_dims.size(); ++i)
      CHECK(r.gen_kernel_dims[i - 1] <= r.gen_kernel_dims[i]);
  }
}

TEST_CASE("matrix equation systems recover the small commutation lemmas") {
  SUBCASE("commutant of U alone") {
    MatrixEquationSystem sys(2, 2);
    sys.add_commute(mat_U());
    const auto k = sys.kernel();
    CHECK(k.size() == 2);  // span{I, U - I}
    std::vector<VecS> expected = {
        {Scalar(1), Scalar(0), Scalar(0), Scalar(1)},
        {Scalar(0), Scalar(1), Scalar(0), Scalar(0)}};
    CHECK(same_span(k, expected));
  }
  SUBCASE("Y U = U Y = Y") {
    MatrixEquationSystem sys(2, 2);
    sys.add_commute(mat_U());
    sys.add_right_identity(mat_U());
    const auto k = sys.kernel();
    CHECK(k.size() == 1);
    std::vector<VecS> expected = {{Scalar(0), Scalar(1), Scalar(0), Scalar(0)}};
    CHECK(same_span(k, expected));
  }
  SUBCASE("U X = X and Uhat X = X force X = 0") {
    MatrixEquationSystem sys(2, 3);
    sys.add_left_identity(mat_U());
    sys.add_left_identity(mat_Uhat());
    CHECK(sys.solution_dim() == 0);
  }
  SUBCASE("Y U = Y and Y Uhat = Y force Y = 0") {
    MatrixEquationSystem sys(3, 2);
    sys.add_right_identity(mat_U());
    sys.add_right_identity(mat_Uhat());
    CHECK(sys.solution_dim() == 0);
  }
  SUBCASE("joint commutant of U and Uhat is the scalars") {
    MatrixEquationSystem sys(2, 2);
    sys.add_commute(mat_U());
    sys.add_commute(mat_Uhat());
    const auto k = sys.kernel();
    CHECK(k.size() == 1);
    std::vector<VecS> expected = {{Scalar(1), Scalar(0), Scalar(0), Scalar(1)}};
    CHECK(same_span(k, expected));
  }
}
