#include "twistrep/symplectic.hpp"

#include <map>

#include "twistrep/linalg.hpp"

namespace twistrep {

Matrix mat_U() {
  return Matrix(2, 2, {Scalar(1), Scalar(1), Scalar(0), Scalar(1)});
}

Matrix mat_Uhat() {
  return Matrix(2, 2, {Scalar(1), Scalar(0), Scalar(-1), Scalar(1)});
}

Matrix mat_L() {
  return Matrix(4, 4,
                {Scalar(1), Scalar(1),  Scalar(0), Scalar(-1),
                 Scalar(0), Scalar(1),  Scalar(0), Scalar(0),
                 Scalar(0), Scalar(-1), Scalar(1), Scalar(1),
                 Scalar(0), Scalar(0),  Scalar(0), Scalar(1)});
}

namespace {

void check_block_index(int g, int i, int max, const char* what) {
  if (g < 1) throw std::invalid_argument("genus must be >= 1");
  if (i < 1 || i > max)
    throw std::invalid_argument(std::string(what) + " index " +
                                std::to_string(i) + " out of range for g=" +
                                std::to_string(g));
}

}  // namespace

Matrix def_A(int g, int i) {
  check_block_index(g, i, g, "A");
  Matrix m = Matrix::identity(2 * static_cast<std::size_t>(g));
  m.set_block(2 * (i - 1), 2 * (i - 1), mat_U());
  return m;
}

Matrix def_B(int g, int i) {
  check_block_index(g, i, g, "B");
  Matrix m = Matrix::identity(2 * static_cast<std::size_t>(g));
  m.set_block(2 * (i - 1), 2 * (i - 1), mat_Uhat());
  return m;
}

Matrix def_C(int g, int k) {
  check_block_index(g, k, g - 1, "C");
  Matrix m = Matrix::identity(2 * static_cast<std::size_t>(g));
  m.set_block(2 * (k - 1), 2 * (k - 1), mat_L());
  return m;
}

Matrix symplectic_form(int g) {
  if (g < 1) throw std::invalid_argument("genus must be >= 1");
  Matrix j(2 * static_cast<std::size_t>(g), 2 * static_cast<std::size_t>(g));
  for (int i = 0; i < g; ++i) {
    j.at(2 * i, 2 * i + 1) = Scalar(1);
    j.at(2 * i + 1, 2 * i) = Scalar(-1);
  }
  return j;
}

bool is_symplectic(const Matrix& m, const Matrix& j) {
  return m.transpose() * j * m == j;
}

Matrix pl_twist_matrix(const VecS& v) {
  const std::size_t n = v.size();
  if (n % 2 != 0)
    throw std::invalid_argument("homology class must have even length");
  Matrix j = symplectic_form(static_cast<int>(n / 2));
  // u = t(v) J, so the transvection is I + v u
  VecS u(n);
  for (std::size_t col = 0; col < n; ++col) {
    Scalar s;
    for (std::size_t k = 0; k < n; ++k) s += v[k] * j.at(k, col);
    u[col] = s;
  }
  Matrix m = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t col = 0; col < n; ++col) m.at(i, col) += v[i] * u[col];
  return m;
}

VecS curve_class(const SurfaceSig& sig, const GeneratorId& gen) {
  require_generator(sig, gen);
  VecS v(2 * static_cast<std::size_t>(sig.g), Scalar(0));
  switch (gen.family) {
    case Family::A:
      v[2 * (gen.index - 1)] = Scalar(1);  // x_i
      break;
    case Family::B:
      v[2 * (gen.index - 1) + 1] = Scalar(1);  // y_i
      break;
    case Family::C:
      v[2 * (gen.index - 1)] = Scalar(1);  // x_k - x_{k+1}
      v[2 * gen.index] = Scalar(-1);
      break;
    case Family::E:
    case Family::F:
      v[0] = Scalar(1);  // x_1
      break;
  }
  return v;
}

Matrix rho0(const SurfaceSig& sig, const GeneratorId& gen) {
  return pl_twist_matrix(curve_class(sig, gen));
}

Matrix rho0_word(const SurfaceSig& sig, const TwistWord& w) {
  Matrix acc = Matrix::identity(2 * static_cast<std::size_t>(sig.g));
  std::map<GeneratorId, Matrix> inv_cache;
  for (const auto& l : w.letters) {
    Matrix m = rho0(sig, l.id);
    if (l.exp < 0) {
      auto it = inv_cache.find(l.id);
      if (it == inv_cache.end())
        it = inv_cache.emplace(l.id, inverse(m)).first;
      m = it->second;
    }
    for (long e = 0; e < (l.exp < 0 ? -l.exp : l.exp); ++e) acc = acc * m;
  }
  return acc;
}

Matrix rotation_G(int g) {
  if (g < 2) throw std::invalid_argument("rotation needs g >= 2");
  const std::size_t n = 2 * static_cast<std::size_t>(g);
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) m.at((j + 2) % n, j) = Scalar(1);
  return m;
}

Matrix block_embed(const VecS& z, const Matrix& a) {
  if (!a.is_square() || z.size() != a.rows())
    throw std::invalid_argument("embed shape mismatch: vector length " +
                                std::to_string(z.size()) + " vs matrix " +
                                a.shape_str());
  const std::size_t n = a.rows();
  Matrix m(n + 1, n + 1);
  m.set_block(0, 0, a);
  for (std::size_t i = 0; i < n; ++i) m.at(i, n) = z[i];
  m.at(n, n) = Scalar(1);
  return m;
}

Matrix dual_rep(const Matrix& m) { return inverse(m.transpose()); }

}  // namespace twistrep
