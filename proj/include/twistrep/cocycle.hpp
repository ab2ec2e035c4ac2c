#pragma once

#include <map>
#include <optional>
#include <vector>

#include "twistrep/matrix.hpp"
#include "twistrep/surface.hpp"

namespace twistrep {

/*
 * A crossed homomorphism given on the twist generators: values in C^{2g},
 * the module structure coming through the symplectic representation.
 * Consistency against the relation catalog is a necessary condition for the
 * assignment to define a homomorphism; no full group presentation exists
 * here, so the catalog check is the soundness boundary.
 */
struct CrossedHomData {
  SurfaceSig sig;
  std::map<GeneratorId, VecS> values;
};

CrossedHomData zero_cocycle(const SurfaceSig& sig);

// c(gen) = rho0(gen) w0 - w0, the coboundary of w0
CrossedHomData principal_cocycle(const SurfaceSig& sig, const VecS& w0);

CrossedHomData cocycle_add(const CrossedHomData& a, const CrossedHomData& b);
CrossedHomData cocycle_scale(const Scalar& z, const CrossedHomData& c);
CrossedHomData cocycle_sub(const CrossedHomData& a, const CrossedHomData& b);
bool cocycle_eq(const CrossedHomData& a, const CrossedHomData& b);

/*
 * Value of the unique cocycle extension on a word, via
 * k(fg) = k(f) + f k(g) and k(f^{-1}) = -f^{-1} k(f).
 */
VecS extend_cocycle(const CrossedHomData& c, const TwistWord& w);

struct RelationViolation {
  RelationInstance relation;
  VecS lhs, rhs;  // the differing extension values
};

// empty list = consistent with every braid/commute instance of the catalog
std::vector<RelationViolation> check_cocycle_on_relations(
    const CrossedHomData& c);

// solves c(gen) = (rho0(gen) - I) w0 jointly over all generators
std::optional<VecS> is_coboundary(const CrossedHomData& c);

struct ScalarEquivCert {
  Scalar mu;  // nonzero
  VecS w;
};

/*
 * Decides c1 ~ c2 mod scalar: c1(gen) = mu c2(gen) + (rho0(gen) - I) w
 * jointly over all generators, mu restricted nonzero. The system is linear
 * in (mu, w); the nonzero-mu filter is applied on the solution set.
 */
std::optional<ScalarEquivCert> cohomologous_mod_scalar(
    const CrossedHomData& c1, const CrossedHomData& c2);

/*
 * A representation given on generators.
 */
struct GeneratorRep {
  SurfaceSig sig;
  std::size_t dim = 0;
  std::map<GeneratorId, Matrix> images;
};

class CocycleInconsistentError : public std::runtime_error {
 public:
  explicit CocycleInconsistentError(std::vector<RelationViolation> violations);
  const std::vector<RelationViolation>& violations() const {
    return violations_;
  }

 private:
  std::vector<RelationViolation> violations_;
};

/*
 * phi_c(gen) = ((rho0(gen), c(gen)), (0, 1)). Refuses assignments that break
 * a catalog relation, since everything downstream assumes a homomorphism.
 */
GeneratorRep build_phi_c(const CrossedHomData& c);

// rho0 (+) trivial: the generator images of phi_0
GeneratorRep symplectic_rep(const SurfaceSig& sig);           // dim 2g
GeneratorRep symplectic_plus_trivial(const SurfaceSig& sig);  // dim 2g+1

// evaluate a word under the representation's images
Matrix rep_word(const GeneratorRep& rep, const TwistWord& w);

struct RelationFailure {
  RelationInstance relation;
  Matrix lhs, rhs;
};

// all braid/commute instances evaluated as exact matrix identities
std::vector<RelationFailure> check_relations(const GeneratorRep& rep);

}  // namespace twistrep
