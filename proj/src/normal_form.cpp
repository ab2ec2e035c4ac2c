#include "twistrep/normal_form.hpp"

#include "twistrep/symplectic.hpp"

namespace twistrep {

namespace {

Matrix tilde(const Matrix& a, int m) {
  if (m == 0) return a;
  return diag_blocks({a, Matrix::identity(static_cast<std::size_t>(m))});
}

Matrix scalar_mat(const Scalar& s) {
  Matrix m(1, 1);
  m.at(0, 0) = s;
  return m;
}

Matrix row_mat(const VecS& v) {
  Matrix m(1, v.size());
  for (std::size_t j = 0; j < v.size(); ++j) m.at(0, j) = v[j];
  return m;
}

SolveWitness witness(std::string stage, std::string detail, Matrix lhs,
                     Matrix rhs) {
  return SolveWitness{std::move(stage), std::move(detail), std::move(lhs),
                      std::move(rhs)};
}

}  // namespace

std::optional<SolveWitness> condition_check(const Matrix& x, SolverRole role,
                                            int k, int g, int m) {
  if (g < 2) throw std::invalid_argument("condition check assumes g >= 2");
  if (m < 0) throw std::invalid_argument("tail dimension must be >= 0");
  if (role == SolverRole::ChainK && (k < 1 || k > g - 1))
    throw std::invalid_argument("chain index k out of range");
  const std::size_t n = 2 * static_cast<std::size_t>(g) + m;
  if (x.rows() != n || x.cols() != n)
    throw std::invalid_argument("candidate is " + x.shape_str() +
                                ", expected " + std::to_string(n) + "x" +
                                std::to_string(n));

  // (i) exactly one eigenvalue 1, as the exact predicate char = (x-1)^n
  auto cp = char_poly(x);
  auto expect = unipotent_char(n);
  if (cp != expect)
    return witness("i", "characteristic polynomial must be (x-1)^n",
                   row_mat(cp), row_mat(expect));

  // (ii) commutation with every At_i
  for (int i = 1; i <= g; ++i) {
    const Matrix at = tilde(def_A(g, i), m);
    Matrix lhs = x * at, rhs = at * x;
    if (lhs != rhs)
      return witness("ii", "must commute with At_" + std::to_string(i),
                     std::move(lhs), std::move(rhs));
  }

  std::vector<int> commute_js, braid_js;
  if (role == SolverRole::ChainK) {
    for (int j = 1; j <= g; ++j)
      if (j != k && j != k + 1) commute_js.push_back(j);
    braid_js = {k, k + 1};
  } else {
    for (int j = 2; j <= g; ++j) commute_js.push_back(j);
    braid_js = {1};
  }

  // (iii) commutation with the stated Bt_j set
  for (int j : commute_js) {
    const Matrix bt = tilde(def_B(g, j), m);
    Matrix lhs = x * bt, rhs = bt * x;
    if (lhs != rhs)
      return witness("iii", "must commute with Bt_" + std::to_string(j),
                     std::move(lhs), std::move(rhs));
  }

  // (iv) braid with the stated Bt_j set
  for (int j : braid_js) {
    const Matrix bt = tilde(def_B(g, j), m);
    Matrix lhs = x * bt * x, rhs = bt * x * bt;
    if (lhs != rhs)
      return witness("iv", "must braid with Bt_" + std::to_string(j),
                     std::move(lhs), std::move(rhs));
  }
  return std::nullopt;
}

bool verify_key_lemma_identities(const KeyLemmaForm& f) {
  if (f.w.size() != static_cast<std::size_t>(f.m) ||
      f.s.size() != static_cast<std::size_t>(f.m) ||
      f.T.rows() != static_cast<std::size_t>(f.m) || !f.T.is_square())
    return false;
  return dot(f.w, f.s).is_zero() && f.T.transpose().apply(f.w) == f.w &&
         f.T.apply(f.s) == f.s && f.T * f.T - f.T == outer(f.s, f.w);
}

KeyLemmaResult key_lemma_solve(const Matrix& xt, int g, int m) {
  if (g < 2) throw std::invalid_argument("key lemma assumes g >= 2");
  if (m < 1) throw std::invalid_argument("key lemma assumes m >= 1");
  const std::size_t tg = 2 * static_cast<std::size_t>(g);
  const std::size_t n = tg + m;
  if (xt.rows() != n || xt.cols() != n)
    throw std::invalid_argument("input is " + xt.shape_str() + ", expected " +
                                std::to_string(n) + "x" + std::to_string(n));

  KeyLemmaResult res;
  auto fail = [&](std::string stage, std::string detail, Matrix lhs,
                  Matrix rhs) {
    res.fail =
        witness(std::move(stage), std::move(detail), std::move(lhs), std::move(rhs));
  };

  const Matrix X = xt.block(0, 0, tg, tg);
  const Matrix W = xt.block(0, tg, tg, m);
  const Matrix S = xt.block(tg, 0, m, tg);
  const Matrix T = xt.block(tg, tg, m, m);

  // block decomposition of (ii): c_1, c_2, c_3
  for (int i = 1; i <= g; ++i) {
    const Matrix ai = def_A(g, i);
    if (Matrix l = X * ai, r = ai * X; l != r) {
      fail("c_1", "X A_" + std::to_string(i), std::move(l), std::move(r));
      return res;
    }
    if (Matrix l = ai * W; l != W) {
      fail("c_2", "A_" + std::to_string(i) + " W = W", std::move(l), W);
      return res;
    }
    if (Matrix l = S * ai; l != S) {
      fail("c_3", "S A_" + std::to_string(i) + " = S", std::move(l), S);
      return res;
    }
  }
  // block decomposition of (iii): c_4, c_5, c_6 for j >= 3
  for (int j = 3; j <= g; ++j) {
    const Matrix bj = def_B(g, j);
    if (Matrix l = X * bj, r = bj * X; l != r) {
      fail("c_4", "X B_" + std::to_string(j), std::move(l), std::move(r));
      return res;
    }
    if (Matrix l = bj * W; l != W) {
      fail("c_5", "B_" + std::to_string(j) + " W = W", std::move(l), W);
      return res;
    }
    if (Matrix l = S * bj; l != S) {
      fail("c_6", "S B_" + std::to_string(j) + " = S", std::move(l), S);
      return res;
    }
  }
  // S = (0 s2 0 s4 0), only columns 2 and 4 can be nonzero
  for (std::size_t col = 0; col < tg; ++col) {
    if (col == 1 || col == 3) continue;
    for (int i = 0; i < m; ++i)
      if (!S.at(i, col).is_zero()) {
        Matrix expected = Matrix::zero(m, tg);
        for (int t = 0; t < m; ++t) {
          expected.at(t, 1) = S.at(t, 1);
          expected.at(t, 3) = S.at(t, 3);
        }
        fail("form_S", "column " + std::to_string(col + 1) + " must vanish", S,
             std::move(expected));
        return res;
      }
  }
  const VecS s2 = S.col_vec(1), s4 = S.col_vec(3);

  // W = t(w1 0 w3 0 0), only rows 1 and 3 can be nonzero
  for (std::size_t row = 0; row < tg; ++row) {
    if (row == 0 || row == 2) continue;
    for (int t = 0; t < m; ++t)
      if (!W.at(row, t).is_zero()) {
        Matrix expected = Matrix::zero(tg, m);
        for (int t2 = 0; t2 < m; ++t2) {
          expected.at(0, t2) = W.at(0, t2);
          expected.at(2, t2) = W.at(2, t2);
        }
        fail("form_W", "row " + std::to_string(row + 1) + " must vanish", W,
             std::move(expected));
        return res;
      }
  }
  const VecS w1 = W.row_vec(0), w3 = W.row_vec(2);

  // X = diag(X0, I_{2g-4}) with X0 the bordered 4x4 pattern, unit diagonal
  if (g >= 3) {
    if (!X.block(0, 4, 4, tg - 4).is_zero() ||
        !X.block(4, 0, tg - 4, 4).is_zero() ||
        !X.block(4, 4, tg - 4, tg - 4).is_identity()) {
      Matrix expected = tilde(X.block(0, 0, 4, 4), static_cast<int>(tg - 4));
      fail("form_X0", "X must be diag(X0, I_{2g-4})", X, std::move(expected));
      return res;
    }
  }
  const Matrix x0 = X.block(0, 0, 4, 4);
  {
    const std::size_t zeros[][2] = {{0, 2}, {1, 0}, {1, 2}, {1, 3},
                                    {2, 0}, {3, 0}, {3, 1}, {3, 2}};
    bool ok = true;
    for (auto [i, j] : zeros)
      if (!x0.at(i, j).is_zero()) ok = false;
    if (!x0.at(0, 0).is_one() || !x0.at(1, 1).is_one() ||
        !x0.at(2, 2).is_one() || !x0.at(3, 3).is_one())
      ok = false;
    if (!ok) {
      Matrix expected(4, 4,
                      {Scalar(1), x0.at(0, 1), Scalar(0), x0.at(0, 3),
                       Scalar(0), Scalar(1), Scalar(0), Scalar(0),
                       Scalar(0), x0.at(2, 1), Scalar(1), x0.at(2, 3),
                       Scalar(0), Scalar(0), Scalar(0), Scalar(1)});
      fail("form_X0", "X0 must match the bordered unipotent pattern", x0,
           std::move(expected));
      return res;
    }
  }
  const Scalar b = x0.at(0, 1), alpha = x0.at(0, 3);
  const Scalar beta = x0.at(2, 1), d = x0.at(2, 3);

  // derived scalar facts, in the order the derivation pins them down
  if (!b.is_one()) {
    fail("c_11", "(2,1)-entry forces b = 1", scalar_mat(b),
         scalar_mat(Scalar(1)));
    return res;
  }
  if (!d.is_one()) {
    fail("c_15", "(2,1)-entry forces d = 1", scalar_mat(d),
         scalar_mat(Scalar(1)));
    return res;
  }
  if (Scalar v = dot(w1, s2); !v.is_zero()) {
    fail("c_11", "(1,2)-entry forces t(w1) s2 = 0", scalar_mat(v),
         scalar_mat(Scalar(0)));
    return res;
  }
  if (Scalar v = dot(w1, s4); !v.is_zero()) {
    fail("c_12", "(1,2)-entry forces t(w1) s4 = 0", scalar_mat(v),
         scalar_mat(Scalar(0)));
    return res;
  }
  if (Scalar v = dot(w3, s2); !v.is_zero()) {
    fail("c_13", "(1,2)-entry forces t(w3) s2 = 0", scalar_mat(v),
         scalar_mat(Scalar(0)));
    return res;
  }
  if (Scalar v = dot(w3, s4); !v.is_zero()) {
    fail("c_15", "(1,2)-entry forces t(w3) s4 = 0", scalar_mat(v),
         scalar_mat(Scalar(0)));
    return res;
  }
  if (Matrix ws = W * S; !ws.is_zero()) {
    fail("c_16", "W S = 0", std::move(ws), Matrix::zero(tg, tg));
    return res;
  }
  if (alpha.is_zero() || !(alpha * beta).is_one()) {
    fail("c_14", "(1,2)-entry forces alpha beta = 1",
         scalar_mat(alpha * beta), scalar_mat(Scalar(1)));
    return res;
  }

  // c_8': w3 = (1/alpha) w1 and t(w1) T = t(w1)
  if (w3 != vec_scale(inverse(alpha), w1)) {
    fail("c_8", "w3 = (1/alpha) w1", row_mat(w3),
         row_mat(vec_scale(inverse(alpha), w1)));
    return res;
  }
  if (T.transpose().apply(w1) != w1) {
    fail("c_8", "t(w1) T = t(w1)", row_mat(T.transpose().apply(w1)),
         row_mat(w1));
    return res;
  }
  // c_9': s4 = alpha s2 and T s2 = s2
  if (s4 != vec_scale(alpha, s2)) {
    fail("c_9", "s4 = alpha s2", row_mat(s4), row_mat(vec_scale(alpha, s2)));
    return res;
  }
  if (T.apply(s2) != s2) {
    fail("c_9", "T s2 = s2", row_mat(T.apply(s2)), row_mat(s2));
    return res;
  }
  // c_10': s2 t(w1) = T^2 - T = s4 t(w3)
  {
    const Matrix tt = T * T - T;
    if (outer(s2, w1) != tt) {
      fail("c_10", "s2 t(w1) = T^2 - T", outer(s2, w1), tt);
      return res;
    }
    if (outer(s4, w3) != tt) {
      fail("c_10", "s4 t(w3) = T^2 - T", outer(s4, w3), tt);
      return res;
    }
  }

  // assemble P = diag(I_2, p I_2, I_{2g-4}) with p = -1/alpha
  const Scalar p = Scalar(-1) / alpha;
  Matrix pt = Matrix::identity(n), pti = Matrix::identity(n);
  pt.at(2, 2) = p;
  pt.at(3, 3) = p;
  pti.at(2, 2) = inverse(p);
  pti.at(3, 3) = inverse(p);
  Matrix reduced = pti * xt * pt;

  Matrix expected(n, n);
  expected.set_block(0, 0, def_C(g, 1));
  for (int t = 0; t < m; ++t) {
    expected.at(0, tg + t) = w1[t];
    expected.at(2, tg + t) = -w1[t];
    expected.at(tg + t, 1) = s2[t];
    expected.at(tg + t, 3) = -s2[t];
  }
  expected.set_block(tg, tg, T);
  if (reduced != expected) {
    fail("final", "conjugated matrix must match ((C_1, W_1), (S_1, T))",
         reduced, std::move(expected));
    return res;
  }

  res.form = KeyLemmaForm{m, p, w1, s2, T};
  if (!verify_key_lemma_identities(res.form)) {
    fail("final", "constraint set on (w, s, T) must hold", reduced, expected);
    return res;
  }
  res.conjugator = std::move(pt);
  res.reduced = std::move(reduced);
  return res;
}

ExtraGenResult extra_gen_solve(const Matrix& ft, int g, int m) {
  if (g < 2) throw std::invalid_argument("extra-generator form assumes g >= 2");
  if (m < 1) throw std::invalid_argument("tail dimension must be >= 1");
  const std::size_t tg = 2 * static_cast<std::size_t>(g);
  const std::size_t n = tg + m;
  if (ft.rows() != n || ft.cols() != n)
    throw std::invalid_argument("input is " + ft.shape_str() + ", expected " +
                                std::to_string(n) + "x" + std::to_string(n));

  ExtraGenResult res;
  auto fail = [&](std::string stage, std::string detail, Matrix lhs,
                  Matrix rhs) {
    res.fail = witness(std::move(stage), std::move(detail), std::move(lhs),
                       std::move(rhs));
  };

  const Matrix X = ft.block(0, 0, tg, tg);
  const Matrix W = ft.block(0, tg, tg, m);
  const Matrix S = ft.block(tg, 0, m, tg);
  const Matrix T = ft.block(tg, tg, m, m);

  for (int i = 1; i <= g; ++i) {
    const Matrix ai = def_A(g, i);
    if (Matrix l = X * ai, r = ai * X; l != r) {
      fail("c_1", "X A_" + std::to_string(i), std::move(l), std::move(r));
      return res;
    }
    if (Matrix l = ai * W; l != W) {
      fail("c_2", "A_" + std::to_string(i) + " W = W", std::move(l), W);
      return res;
    }
    if (Matrix l = S * ai; l != S) {
      fail("c_3", "S A_" + std::to_string(i) + " = S", std::move(l), S);
      return res;
    }
  }
  // here (iii) runs over 2 <= j <= g, one block further than the key lemma
  for (int j = 2; j <= g; ++j) {
    const Matrix bj = def_B(g, j);
    if (Matrix l = X * bj, r = bj * X; l != r) {
      fail("c_4", "X B_" + std::to_string(j), std::move(l), std::move(r));
      return res;
    }
    if (Matrix l = bj * W; l != W) {
      fail("c_5", "B_" + std::to_string(j) + " W = W", std::move(l), W);
      return res;
    }
    if (Matrix l = S * bj; l != S) {
      fail("c_6", "S B_" + std::to_string(j) + " = S", std::move(l), S);
      return res;
    }
  }
  // S = (0 s 0 0 0): the stronger (iii) range also kills column 4
  for (std::size_t col = 0; col < tg; ++col) {
    if (col == 1) continue;
    for (int t = 0; t < m; ++t)
      if (!S.at(t, col).is_zero()) {
        Matrix expected = Matrix::zero(m, tg);
        for (int t2 = 0; t2 < m; ++t2) expected.at(t2, 1) = S.at(t2, 1);
        fail("form_S", "column " + std::to_string(col + 1) + " must vanish", S,
             std::move(expected));
        return res;
      }
  }
  const VecS s = S.col_vec(1);

  // W = t(w 0 0 0 0): row 3 is forced to vanish as well
  for (std::size_t row = 0; row < tg; ++row) {
    if (row == 0) continue;
    for (int t = 0; t < m; ++t)
      if (!W.at(row, t).is_zero()) {
        Matrix expected = Matrix::zero(tg, m);
        for (int t2 = 0; t2 < m; ++t2) expected.at(0, t2) = W.at(0, t2);
        fail("form_W", "row " + std::to_string(row + 1) + " must vanish", W,
             std::move(expected));
        return res;
      }
  }
  const VecS w = W.row_vec(0);

  if (g >= 3) {
    if (!X.block(0, 4, 4, tg - 4).is_zero() ||
        !X.block(4, 0, tg - 4, 4).is_zero() ||
        !X.block(4, 4, tg - 4, tg - 4).is_identity()) {
      Matrix expected = tilde(X.block(0, 0, 4, 4), static_cast<int>(tg - 4));
      fail("form_X0", "X must be diag(X0, I_{2g-4})", X, std::move(expected));
      return res;
    }
  }
  const Matrix x0 = X.block(0, 0, 4, 4);
  {
    const std::size_t zeros[][2] = {{0, 2}, {1, 0}, {1, 2}, {1, 3},
                                    {2, 0}, {3, 0}, {3, 1}, {3, 2}};
    bool ok = true;
    for (auto [i, j] : zeros)
      if (!x0.at(i, j).is_zero()) ok = false;
    if (!x0.at(0, 0).is_one() || !x0.at(1, 1).is_one() ||
        !x0.at(2, 2).is_one() || !x0.at(3, 3).is_one())
      ok = false;
    if (!ok) {
      Matrix expected(4, 4,
                      {Scalar(1), x0.at(0, 1), Scalar(0), x0.at(0, 3),
                       Scalar(0), Scalar(1), Scalar(0), Scalar(0),
                       Scalar(0), x0.at(2, 1), Scalar(1), x0.at(2, 3),
                       Scalar(0), Scalar(0), Scalar(0), Scalar(1)});
      fail("form_X0", "X0 must match the bordered unipotent pattern", x0,
           std::move(expected));
      return res;
    }
  }
  // commutation with B_2 wipes the off-diagonal parameters
  if (!x0.at(0, 3).is_zero() || !x0.at(2, 1).is_zero() ||
      !x0.at(2, 3).is_zero()) {
    fail("c_4", "j = 2 forces alpha = beta = d = 0", x0,
         diag_blocks({mat_U(), Matrix::identity(2)}));
    return res;
  }
  // the braid with B_1 pins b = 1 and t(w) s = 0
  if (!x0.at(0, 1).is_one()) {
    fail("c_7", "entries force b = 1", scalar_mat(x0.at(0, 1)),
         scalar_mat(Scalar(1)));
    return res;
  }
  if (Scalar v = dot(w, s); !v.is_zero()) {
    fail("c_7", "entries force t(w) s = 0", scalar_mat(v),
         scalar_mat(Scalar(0)));
    return res;
  }
  if (X != def_A(g, 1)) {
    fail("final", "X block must equal A_1", X, def_A(g, 1));
    return res;
  }
  if (T.transpose().apply(w) != w) {
    fail("c_8", "t(w) T = t(w)", row_mat(T.transpose().apply(w)), row_mat(w));
    return res;
  }
  if (T.apply(s) != s) {
    fail("c_9", "T s = s", row_mat(T.apply(s)), row_mat(s));
    return res;
  }
  if (T * T - T != outer(s, w)) {
    fail("c_10", "s t(w) = T^2 - T", outer(s, w), T * T - T);
    return res;
  }
  if (m == 1) {
    if (!(w[0].is_zero() || s[0].is_zero())) {
      fail("final", "m = 1 forces w = 0 or s = 0", scalar_mat(w[0] * s[0]),
           scalar_mat(Scalar(0)));
      return res;
    }
    if (!T.at(0, 0).is_one()) {
      fail("final", "determinant forces unit corner", T,
           Matrix::identity(1));
      return res;
    }
  }
  res.form = ExtraGenForm{m, w, s, T};
  return res;
}

namespace {

// chain-1 solve in the 2g-dimensional setting: same derivation, no tail
struct Chain2gSolve {
  std::optional<SolveWitness> fail;
  Scalar p;
};

Chain2gSolve chain1_solve_2g(const Matrix& x, int g) {
  Chain2gSolve res;
  const std::size_t tg = 2 * static_cast<std::size_t>(g);
  auto fail = [&](std::string stage, std::string detail, Matrix lhs,
                  Matrix rhs) {
    res.fail = witness(std::move(stage), std::move(detail), std::move(lhs),
                       std::move(rhs));
  };
  for (int i = 1; i <= g; ++i) {
    const Matrix ai = def_A(g, i);
    if (Matrix l = x * ai, r = ai * x; l != r) {
      fail("c_1", "X A_" + std::to_string(i), std::move(l), std::move(r));
      return res;
    }
  }
  for (int j = 3; j <= g; ++j) {
    const Matrix bj = def_B(g, j);
    if (Matrix l = x * bj, r = bj * x; l != r) {
      fail("c_4", "X B_" + std::to_string(j), std::move(l), std::move(r));
      return res;
    }
  }
  if (g >= 3) {
    if (!x.block(0, 4, 4, tg - 4).is_zero() ||
        !x.block(4, 0, tg - 4, 4).is_zero() ||
        !x.block(4, 4, tg - 4, tg - 4).is_identity()) {
      Matrix expected = diag_blocks(
          {x.block(0, 0, 4, 4), Matrix::identity(tg - 4)});
      fail("form_X0", "X must be diag(X0, I_{2g-4})", x, std::move(expected));
      return res;
    }
  }
  const Matrix x0 = x.block(0, 0, 4, 4);
  {
    const std::size_t zeros[][2] = {{0, 2}, {1, 0}, {1, 2}, {1, 3},
                                    {2, 0}, {3, 0}, {3, 1}, {3, 2}};
    bool ok = true;
    for (auto [i, j] : zeros)
      if (!x0.at(i, j).is_zero()) ok = false;
    if (!x0.at(0, 0).is_one() || !x0.at(1, 1).is_one() ||
        !x0.at(2, 2).is_one() || !x0.at(3, 3).is_one())
      ok = false;
    if (!ok) {
      Matrix expected(4, 4,
                      {Scalar(1), x0.at(0, 1), Scalar(0), x0.at(0, 3),
                       Scalar(0), Scalar(1), Scalar(0), Scalar(0),
                       Scalar(0), x0.at(2, 1), Scalar(1), x0.at(2, 3),
                       Scalar(0), Scalar(0), Scalar(0), Scalar(1)});
      fail("form_X0", "X0 must match the bordered unipotent pattern", x0,
           std::move(expected));
      return res;
    }
  }
  const Scalar b = x0.at(0, 1), alpha = x0.at(0, 3);
  const Scalar beta = x0.at(2, 1), d = x0.at(2, 3);
  if (!b.is_one()) {
    fail("c_11", "(2,1)-entry forces b = 1", scalar_mat(b),
         scalar_mat(Scalar(1)));
    return res;
  }
  if (!d.is_one()) {
    fail("c_15", "(2,1)-entry forces d = 1", scalar_mat(d),
         scalar_mat(Scalar(1)));
    return res;
  }
  if (alpha.is_zero() || !(alpha * beta).is_one()) {
    fail("c_14", "(1,2)-entry forces alpha beta = 1",
         scalar_mat(alpha * beta), scalar_mat(Scalar(1)));
    return res;
  }
  res.p = Scalar(-1) / alpha;
  Matrix pm = Matrix::identity(tg), pmi = Matrix::identity(tg);
  pm.at(2, 2) = res.p;
  pm.at(3, 3) = res.p;
  pmi.at(2, 2) = inverse(res.p);
  pmi.at(3, 3) = inverse(res.p);
  if (Matrix reduced = pmi * x * pm; reduced != def_C(g, 1)) {
    fail("final", "conjugated matrix must equal C_1", std::move(reduced),
         def_C(g, 1));
    return res;
  }
  return res;
}

}  // namespace

ChainResult normalize_chain(const std::vector<Matrix>& xs, int g) {
  if (g < 2)
    throw std::invalid_argument("chain normalization assumes g >= 2");
  if (xs.size() != static_cast<std::size_t>(g - 1))
    throw std::invalid_argument("expected g-1 = " + std::to_string(g - 1) +
                                " chain matrices, got " +
                                std::to_string(xs.size()));
  const std::size_t tg = 2 * static_cast<std::size_t>(g);
  ChainResult res;
  res.chain.g = g;

  for (int k = 1; k <= g - 1; ++k) {
    if (auto w = condition_check(xs[k - 1], SolverRole::ChainK, k, g, 1)) {
      res.fail = std::move(w);
      res.fail_k = k;
      return res;
    }
  }

  Matrix q = Matrix::identity(tg);
  const Matrix grot = rotation_G(g);
  for (int k = 1; k <= g - 1; ++k) {
    const Matrix qt = tilde(q, 1);
    Matrix y = inverse(qt) * xs[k - 1] * qt;
    Matrix gk;
    if (k > 1) {
      gk = mat_pow(grot, k - 1);
      const Matrix gkt = tilde(gk, 1);
      y = gkt.transpose() * y * gkt;  // t(G) = G^{-1}
    }
    KeyLemmaResult kl = key_lemma_solve(y, g, 1);
    if (!kl.ok()) {
      res.fail = std::move(kl.fail);
      res.fail_k = k;
      return res;
    }
    if (!kl.form.T.is_identity()) {
      res.fail = witness("final", "determinant forces unit corner", kl.form.T,
                         Matrix::identity(1));
      res.fail_k = k;
      return res;
    }
    VecS wk(tg, Scalar(0)), sk(tg, Scalar(0));
    wk[0] = kl.form.w[0];
    wk[2] = -kl.form.w[0];
    sk[1] = kl.form.s[0];
    sk[3] = -kl.form.s[0];
    if (k > 1) {
      wk = gk.apply(wk);
      sk = gk.apply(sk);
    }
    res.chain.p_list.push_back(kl.form.p);
    res.chain.w.push_back(std::move(wk));
    res.chain.s.push_back(std::move(sk));
    // P_k = diag(I_{2k}, p_k I_2, I_{2g-2k-2}) = G^{k-1} P (G^{k-1})^{-1}
    Matrix pk = Matrix::identity(tg);
    pk.at(2 * k, 2 * k) = kl.form.p;
    pk.at(2 * k + 1, 2 * k + 1) = kl.form.p;
    q = q * pk;
  }

  const Matrix qt = tilde(q, 1);
  const Matrix qti = inverse(qt);
  for (int i = 1; i <= g; ++i) {
    const Matrix at = tilde(def_A(g, i), 1);
    const Matrix bt = tilde(def_B(g, i), 1);
    if (qti * at * qt != at || qti * bt * qt != bt) {
      res.fail = witness("final", "conjugator must fix At_i and Bt_i",
                         qti * at * qt, at);
      return res;
    }
  }
  for (int k = 1; k <= g - 1; ++k) {
    const VecS& wk = res.chain.w[k - 1];
    const VecS& sk = res.chain.s[k - 1];
    Matrix expected(tg + 1, tg + 1);
    expected.set_block(0, 0, def_C(g, k));
    for (std::size_t i = 0; i < tg; ++i) {
      expected.at(i, tg) = wk[i];
      expected.at(tg, i) = sk[i];
    }
    expected.at(tg, tg) = Scalar(1);
    Matrix reduced = qti * xs[k - 1] * qt;
    if (reduced != expected) {
      res.fail = witness("final", "normalized X_" + std::to_string(k) +
                                      " must match ((C_k, w_k), (t(s_k), 1))",
                         std::move(reduced), std::move(expected));
      res.fail_k = k;
      return res;
    }
    if (!vec_is_zero(wk) && !vec_is_zero(sk)) {
      res.fail = witness("final", "either w_k = 0 or s_k = 0",
                         Matrix::column(wk), Matrix::column(sk));
      res.fail_k = k;
      return res;
    }
    for (std::size_t i = 0; i < tg; ++i) {
      const bool in_window =
          i + 1 >= static_cast<std::size_t>(2 * k - 1) &&
          i + 1 <= static_cast<std::size_t>(2 * k + 2);
      if (!in_window && (!wk[i].is_zero() || !sk[i].is_zero())) {
        res.fail = witness("final",
                           "support must stay in rows 2k-1 .. 2k+2",
                           Matrix::column(wk), Matrix::column(sk));
        res.fail_k = k;
        return res;
      }
    }
  }
  res.conjugator = qt;
  return res;
}

Chain2gResult normalize_chain_2g(const std::vector<Matrix>& xs, int g) {
  if (g < 2)
    throw std::invalid_argument("chain normalization assumes g >= 2");
  if (xs.size() != static_cast<std::size_t>(g - 1))
    throw std::invalid_argument("expected g-1 = " + std::to_string(g - 1) +
                                " chain matrices, got " +
                                std::to_string(xs.size()));
  const std::size_t tg = 2 * static_cast<std::size_t>(g);
  Chain2gResult res;

  for (int k = 1; k <= g - 1; ++k) {
    if (auto w = condition_check(xs[k - 1], SolverRole::ChainK, k, g, 0)) {
      res.fail = std::move(w);
      res.fail_k = k;
      return res;
    }
  }

  Matrix q = Matrix::identity(tg);
  const Matrix grot = rotation_G(g);
  for (int k = 1; k <= g - 1; ++k) {
    Matrix y = inverse(q) * xs[k - 1] * q;
    Matrix gk;
    if (k > 1) {
      gk = mat_pow(grot, k - 1);
      y = gk.transpose() * y * gk;
    }
    Chain2gSolve sol = chain1_solve_2g(y, g);
    if (sol.fail) {
      res.fail = std::move(sol.fail);
      res.fail_k = k;
      return res;
    }
    res.p_list.push_back(sol.p);
    Matrix pk = Matrix::identity(tg);
    pk.at(2 * k, 2 * k) = sol.p;
    pk.at(2 * k + 1, 2 * k + 1) = sol.p;
    q = q * pk;
  }

  const Matrix qi = inverse(q);
  for (int i = 1; i <= g; ++i) {
    if (qi * def_A(g, i) * q != def_A(g, i) ||
        qi * def_B(g, i) * q != def_B(g, i)) {
      res.fail = witness("final", "conjugator must fix A_i and B_i",
                         qi * def_A(g, i) * q, def_A(g, i));
      return res;
    }
  }
  for (int k = 1; k <= g - 1; ++k) {
    Matrix reduced = qi * xs[k - 1] * q;
    if (reduced != def_C(g, k)) {
      res.fail = witness("final",
                         "normalized X_" + std::to_string(k) +
                             " must equal C_" + std::to_string(k),
                         std::move(reduced), def_C(g, k));
      res.fail_k = k;
      return res;
    }
  }
  res.conjugator = q;
  return res;
}

std::string to_string(BlockVerdict v) {
  switch (v) {
    case BlockVerdict::TypeA:
      return "TypeA";
    case BlockVerdict::TypeB:
      return "TypeB";
    case BlockVerdict::NotBlockForm:
      return "NotBlockForm";
  }
  return "?";
}

namespace {

bool upper_pattern(const Matrix& m) {
  const std::size_t n = m.rows();
  for (std::size_t j = 0; j + 1 < n; ++j)
    if (!m.at(n - 1, j).is_zero()) return false;
  return m.at(n - 1, n - 1).is_one();
}

bool lower_pattern(const Matrix& m) {
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (!m.at(i, n - 1).is_zero()) return false;
  return m.at(n - 1, n - 1).is_one();
}

// cocycle values from images already in upper block form; fails (nullopt)
// when some F block differs from the rho0 image
std::optional<CrossedHomData> extract_upper(
    const SurfaceSig& sig, const std::vector<GeneratorId>& gens,
    const std::vector<Matrix>& images) {
  const std::size_t tg = images.front().rows() - 1;
  CrossedHomData c{sig, {}};
  for (std::size_t t = 0; t < gens.size(); ++t) {
    if (images[t].block(0, 0, tg, tg) != rho0(sig, gens[t]))
      return std::nullopt;
    VecS v(tg);
    for (std::size_t i = 0; i < tg; ++i) v[i] = images[t].at(i, tg);
    c.values[gens[t]] = std::move(v);
  }
  return c;
}

}  // namespace

DichotomyResult classify_dichotomy(const GeneratorRep& rep) {
  if (rep.sig.g < 2) throw UnsupportedGenusError(rep.sig.g);
  const std::size_t tg = 2 * static_cast<std::size_t>(rep.sig.g);
  if (rep.dim != tg + 1)
    throw std::invalid_argument("dichotomy expects dimension 2g+1 = " +
                                std::to_string(tg + 1) + ", got " +
                                std::to_string(rep.dim));
  const auto gens = generator_set(rep.sig);
  std::vector<Matrix> images;
  for (const auto& gen : gens) {
    auto it = rep.images.find(gen);
    if (it == rep.images.end())
      throw std::invalid_argument("representation has no image for " +
                                  to_key(gen));
    if (it->second.rows() != rep.dim || it->second.cols() != rep.dim)
      throw std::invalid_argument("image of " + to_key(gen) +
                                  " has shape " + it->second.shape_str());
    images.push_back(it->second);
  }

  DichotomyResult res;
  bool all_upper = true, all_lower = true;
  for (const auto& m : images) {
    all_upper = all_upper && upper_pattern(m);
    all_lower = all_lower && lower_pattern(m);
  }
  if (all_upper) {
    res.verdict = BlockVerdict::TypeA;
    res.extracted = extract_upper(rep.sig, gens, images);
    return res;
  }
  if (all_lower) {
    res.verdict = BlockVerdict::TypeB;
    std::vector<Matrix> duals;
    duals.reserve(images.size());
    for (const auto& m : images) duals.push_back(dual_rep(m));
    res.extracted = extract_upper(rep.sig, gens, duals);
    return res;
  }
  res.verdict = BlockVerdict::NotBlockForm;
  for (std::size_t t = 0; t < gens.size(); ++t) {
    if (!upper_pattern(images[t]) && !lower_pattern(images[t])) {
      res.witness = gens[t];
      return res;
    }
  }
  // mixed strict types: report the first image whose type disagrees with the
  // first strictly typed one
  int first_type = 0;  // +1 strictly upper, -1 strictly lower
  for (std::size_t t = 0; t < gens.size(); ++t) {
    const bool up = upper_pattern(images[t]);
    const bool low = lower_pattern(images[t]);
    const int ty = up && !low ? 1 : (low && !up ? -1 : 0);
    if (ty == 0) continue;
    if (first_type == 0) {
      first_type = ty;
    } else if (ty != first_type) {
      res.witness = gens[t];
      return res;
    }
  }
  return res;
}

EigenAssertion assert_eigen_theorem(const GeneratorRep& rep,
                                    const GeneratorId& gen) {
  const std::size_t tg = 2 * static_cast<std::size_t>(rep.sig.g);
  if (rep.dim != tg + 1)
    throw std::invalid_argument("eigen assertion expects dimension 2g+1");
  auto it = rep.images.find(gen);
  if (it == rep.images.end())
    throw std::invalid_argument("representation has no image for " +
                                to_key(gen));
  EigenAssertion a;
  a.report = eigen_report(it->second);
  a.pass = a.report.unique_eigenvalue_one() &&
           a.report.eigenspace_dim_one == tg;
  return a;
}

}  // namespace twistrep
