#include "twistrep/cocycle.hpp"

#include "twistrep/linalg.hpp"
#include "twistrep/symplectic.hpp"

namespace twistrep {

namespace {

std::size_t module_dim(const SurfaceSig& sig) {
  return 2 * static_cast<std::size_t>(sig.g);
}

void require_complete(const CrossedHomData& c) {
  for (const auto& gen : generator_set(c.sig)) {
    auto it = c.values.find(gen);
    if (it == c.values.end())
      throw std::invalid_argument("cocycle is missing a value for " +
                                  to_key(gen));
    if (it->second.size() != module_dim(c.sig))
      throw std::invalid_argument("cocycle value for " + to_key(gen) +
                                  " has wrong length");
  }
}

}  // namespace

CrossedHomData zero_cocycle(const SurfaceSig& sig) {
  CrossedHomData c{sig, {}};
  for (const auto& gen : generator_set(sig))
    c.values[gen] = VecS(module_dim(sig), Scalar(0));
  return c;
}

CrossedHomData principal_cocycle(const SurfaceSig& sig, const VecS& w0) {
  if (w0.size() != module_dim(sig))
    throw std::invalid_argument("w0 must have length 2g");
  CrossedHomData c{sig, {}};
  for (const auto& gen : generator_set(sig))
    c.values[gen] = vec_sub(rho0(sig, gen).apply(w0), w0);
  return c;
}

CrossedHomData cocycle_add(const CrossedHomData& a, const CrossedHomData& b) {
  if (!(a.sig == b.sig))
    throw std::invalid_argument("cocycles live on different surfaces");
  CrossedHomData c{a.sig, {}};
  for (const auto& [gen, v] : a.values) c.values[gen] = vec_add(v, b.values.at(gen));
  return c;
}

CrossedHomData cocycle_scale(const Scalar& z, const CrossedHomData& c) {
  CrossedHomData r{c.sig, {}};
  for (const auto& [gen, v] : c.values) r.values[gen] = vec_scale(z, v);
  return r;
}

CrossedHomData cocycle_sub(const CrossedHomData& a, const CrossedHomData& b) {
  return cocycle_add(a, cocycle_scale(Scalar(-1), b));
}

bool cocycle_eq(const CrossedHomData& a, const CrossedHomData& b) {
  return a.sig == b.sig && a.values == b.values;
}

VecS extend_cocycle(const CrossedHomData& c, const TwistWord& w) {
  require_complete(c);
  const std::size_t n = module_dim(c.sig);
  VecS value(n, Scalar(0));
  Matrix acting = Matrix::identity(n);
  for (const auto& l : w.letters) {
    require_generator(c.sig, l.id);
    const Matrix m = rho0(c.sig, l.id);
    const VecS& cv = c.values.at(l.id);
    if (l.exp > 0) {
      for (long e = 0; e < l.exp; ++e) {
        value = vec_add(value, acting.apply(cv));
        acting = acting * m;
      }
    } else {
      const Matrix minv = inverse(m);
      const VecS step = vec_scale(Scalar(-1), minv.apply(cv));
      for (long e = 0; e < -l.exp; ++e) {
        value = vec_add(value, acting.apply(step));
        acting = acting * minv;
      }
    }
  }
  return value;
}

std::vector<RelationViolation> check_cocycle_on_relations(
    const CrossedHomData& c) {
  require_complete(c);
  std::vector<RelationViolation> out;
  for (const auto& rel : relation_catalog(c.sig)) {
    if (rel.kind == RelationKind::LanternMetadata) continue;
    VecS l = extend_cocycle(c, rel.lhs);
    VecS r = extend_cocycle(c, rel.rhs);
    if (l != r) out.push_back({rel, std::move(l), std::move(r)});
  }
  return out;
}

std::optional<VecS> is_coboundary(const CrossedHomData& c) {
  require_complete(c);
  const std::size_t n = module_dim(c.sig);
  const auto gens = generator_set(c.sig);
  Matrix stacked(gens.size() * n, n);
  VecS rhs(gens.size() * n);
  std::size_t row = 0;
  for (const auto& gen : gens) {
    const Matrix block = rho0(c.sig, gen) - Matrix::identity(n);
    stacked.set_block(row, 0, block);
    const VecS& v = c.values.at(gen);
    for (std::size_t i = 0; i < n; ++i) rhs[row + i] = v[i];
    row += n;
  }
  auto sol = solve_linear(stacked, rhs);
  if (!sol.feasible) return std::nullopt;
  return sol.particular;
}

std::optional<ScalarEquivCert> cohomologous_mod_scalar(
    const CrossedHomData& c1, const CrossedHomData& c2) {
  if (!(c1.sig == c2.sig))
    throw std::invalid_argument("cocycles live on different surfaces");
  require_complete(c1);
  require_complete(c2);
  const std::size_t n = module_dim(c1.sig);
  const auto gens = generator_set(c1.sig);
  // unknowns (mu, w): column 0 holds c2(gen), columns 1..2g hold rho0 - I
  Matrix stacked(gens.size() * n, n + 1);
  VecS rhs(gens.size() * n);
  std::size_t row = 0;
  for (const auto& gen : gens) {
    const VecS& v2 = c2.values.at(gen);
    for (std::size_t i = 0; i < n; ++i) stacked.at(row + i, 0) = v2[i];
    stacked.set_block(row, 1, rho0(c1.sig, gen) - Matrix::identity(n));
    const VecS& v1 = c1.values.at(gen);
    for (std::size_t i = 0; i < n; ++i) rhs[row + i] = v1[i];
    row += n;
  }
  auto sol = solve_linear(stacked, rhs);
  if (!sol.feasible) return std::nullopt;
  VecS u = sol.particular;
  if (u[0].is_zero()) {
    // shift along the nullspace to make mu nonzero, if possible
    bool fixed = false;
    for (const auto& nv : sol.nullspace) {
      if (!nv[0].is_zero()) {
        u = vec_add(u, nv);
        fixed = true;
        break;
      }
    }
    if (!fixed) return std::nullopt;
  }
  ScalarEquivCert cert;
  cert.mu = u[0];
  cert.w.assign(u.begin() + 1, u.end());
  return cert;
}

CocycleInconsistentError::CocycleInconsistentError(
    std::vector<RelationViolation> violations)
    : std::runtime_error("cocycle violates " +
                         std::to_string(violations.size()) +
                         " catalog relation(s)"),
      violations_(std::move(violations)) {}

GeneratorRep build_phi_c(const CrossedHomData& c) {
  auto violations = check_cocycle_on_relations(c);
  if (!violations.empty())
    throw CocycleInconsistentError(std::move(violations));
  GeneratorRep rep{c.sig, module_dim(c.sig) + 1, {}};
  for (const auto& gen : generator_set(c.sig))
    rep.images[gen] = block_embed(c.values.at(gen), rho0(c.sig, gen));
  return rep;
}

GeneratorRep symplectic_rep(const SurfaceSig& sig) {
  GeneratorRep rep{sig, 2 * static_cast<std::size_t>(sig.g), {}};
  for (const auto& gen : generator_set(sig)) rep.images[gen] = rho0(sig, gen);
  return rep;
}

GeneratorRep symplectic_plus_trivial(const SurfaceSig& sig) {
  return build_phi_c(zero_cocycle(sig));
}

Matrix rep_word(const GeneratorRep& rep, const TwistWord& w) {
  Matrix acc = Matrix::identity(rep.dim);
  std::map<GeneratorId, Matrix> inv_cache;
  for (const auto& l : w.letters) {
    auto it = rep.images.find(l.id);
    if (it == rep.images.end())
      throw std::invalid_argument("representation has no image for " +
                                  to_key(l.id));
    Matrix m = it->second;
    if (l.exp < 0) {
      auto ic = inv_cache.find(l.id);
      if (ic == inv_cache.end()) ic = inv_cache.emplace(l.id, inverse(m)).first;
      m = ic->second;
    }
    for (long e = 0; e < (l.exp < 0 ? -l.exp : l.exp); ++e) acc = acc * m;
  }
  return acc;
}

std::vector<RelationFailure> check_relations(const GeneratorRep& rep) {
  std::vector<RelationFailure> out;
  for (const auto& rel : relation_catalog(rep.sig)) {
    if (rel.kind == RelationKind::LanternMetadata) continue;
    Matrix l = rep_word(rep, rel.lhs);
    Matrix r = rep_word(rep, rel.rhs);
    if (l != r) out.push_back({rel, std::move(l), std::move(r)});
  }
  return out;
}

}  // namespace twistrep
