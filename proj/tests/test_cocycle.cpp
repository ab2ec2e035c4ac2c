#include <doctest.h>

#include "twistrep/cocycle.hpp"
#include "twistrep/linalg.hpp"
#include "twistrep/random.hpp"
#include "twistrep/symplectic.hpp"

using namespace twistrep;

namespace {

TwistWord seeded_word(Rng& rng, const std::vector<GeneratorId>& gens,
                      int max_len) {
  TwistWord w;
  const int len = rng.range(0, max_len);
  for (int i = 0; i < len; ++i) {
    const auto& id = gens[rng.range(0, gens.size() - 1)];
    long exp = rng.range(-2, 2);
    if (exp == 0) exp = 1;
    w = concat(w, word_of(id, exp));
  }
  return w;
}

}  // namespace

TEST_CASE("cocycle extension basics") {
  const SurfaceSig sig{2, 0, 0};
  Rng rng(11);
  CrossedHomData c{sig, {}};
  for (const auto& gen : generator_set(sig)) c.values[gen] = rng.vec(4);

  CHECK(vec_is_zero(extend_cocycle(c, {})));

  const GeneratorId a1{Family::A, 1};
  const VecS twice = extend_cocycle(c, word_of(a1, 2));
  CHECK(twice ==
        vec_add(c.values[a1], rho0(sig, a1).apply(c.values[a1])));
  CHECK(vec_is_zero(
      extend_cocycle(c, concat(word_of(a1), word_of(a1, -1)))));
}

TEST_CASE("extension is word-homomorphic") {
  Rng rng(12);
  for (int g = 2; g <= 5; ++g) {
    const SurfaceSig sig{g, 0, 0};
    const auto gens = generator_set(sig);
    CrossedHomData c{sig, {}};
    for (const auto& gen : gens) c.values[gen] = rng.vec(2 * g);
    for (int t = 0; t < 10; ++t) {
      const TwistWord w1 = seeded_word(rng, gens, 4);
      const TwistWord w2 = seeded_word(rng, gens, 4);
      const VecS expected = vec_add(
          extend_cocycle(c, w1), rho0_word(sig, w1).apply(extend_cocycle(c, w2)));
      CHECK(extend_cocycle(c, concat(w1, w2)) == expected);
    }
  }
}

TEST_CASE("principal cocycles") {
  const SurfaceSig sig{2, 0, 0};
  CHECK(cocycle_eq(principal_cocycle(sig, VecS(4, Scalar(0))),
                   zero_cocycle(sig)));
  // w0 = x_1: a-twists fix it, the b_1 twist shears it to x_1 - y_1
  const VecS w0{Scalar(1), Scalar(0), Scalar(0), Scalar(0)};
  const auto c = principal_cocycle(sig, w0);
  CHECK(vec_is_zero(c.values.at({Family::A, 1})));
  CHECK(c.values.at({Family::B, 1}) ==
        VecS{Scalar(0), Scalar(-1), Scalar(0), Scalar(0)});
  CHECK(vec_is_zero(c.values.at({Family::C, 1})));
  CHECK(check_cocycle_on_relations(c).empty());
  CHECK(check_cocycle_on_relations(zero_cocycle(sig)).empty());
}

TEST_CASE("random generator assignments generically break relations") {
  const SurfaceSig sig{3, 0, 0};
  Rng rng(13);
  CrossedHomData c{sig, {}};
  for (const auto& gen : generator_set(sig)) c.values[gen] = rng.vec(6);
  const auto violations = check_cocycle_on_relations(c);
  CHECK(!violations.empty());
  // every reported violation really differs
  for (const auto& v : violations) CHECK(v.lhs != v.rhs);
}

TEST_CASE("coboundary recognition") {
  const SurfaceSig sig{3, 0, 0};
  Rng rng(14);
  SUBCASE("round trip") {
    const VecS w0 = rng.vec(6);
    const auto c = principal_cocycle(sig, w0);
    const auto back = is_coboundary(c);
    REQUIRE(back.has_value());
    for (const auto& gen : generator_set(sig)) {
      const Matrix shifted = rho0(sig, gen) - Matrix::identity(6);
      CHECK(vec_is_zero(shifted.apply(vec_sub(w0, *back))));
    }
  }
  SUBCASE("zero cocycle admits w0 = 0") {
    const auto back = is_coboundary(zero_cocycle(sig));
    REQUIRE(back.has_value());
    for (const auto& gen : generator_set(sig))
      CHECK(vec_is_zero(
          (rho0(sig, gen) - Matrix::identity(6)).apply(*back)));
  }
  SUBCASE("value outside the column space of (A_1 - I)") {
    // im(A_1 - I) = span{x_1}, so a y_1 component cannot be a coboundary
    auto c = zero_cocycle(sig);
    c.values[{Family::A, 1}][1] = Scalar(1);
    CHECK_FALSE(is_coboundary(c).has_value());
  }
}

TEST_CASE("scalar-equivalence solver") {
  const SurfaceSig sig{2, 0, 0};
  Rng rng(15);
  const auto gens = generator_set(sig);

  auto certify = [&](const CrossedHomData& c1, const CrossedHomData& c2,
                     const ScalarEquivCert& cert) {
    CHECK(!cert.mu.is_zero());
    for (const auto& gen : gens) {
      const VecS rhs =
          vec_add(vec_scale(cert.mu, c2.values.at(gen)),
                  vec_sub(rho0(sig, gen).apply(cert.w), cert.w));
      CHECK(c1.values.at(gen) == rhs);
    }
  };

  SUBCASE("identical cocycles") {
    const auto c = principal_cocycle(sig, rng.vec(4));
    const auto cert = cohomologous_mod_scalar(c, c);
    REQUIRE(cert.has_value());
    certify(c, c, *cert);
  }
  SUBCASE("scaled plus coboundary") {
    const auto c2 = principal_cocycle(sig, rng.nonzero_vec(4));
    const auto c1 = cocycle_add(cocycle_scale(Scalar(3), c2),
                                principal_cocycle(sig, rng.vec(4)));
    const auto cert = cohomologous_mod_scalar(c1, c2);
    REQUIRE(cert.has_value());
    certify(c1, c2, *cert);
    // symmetry: (1/mu, -w/mu) certifies the reverse direction
    const Scalar mu_back = inverse(cert->mu);
    const VecS w_back = vec_scale(-mu_back, cert->w);
    for (const auto& gen : gens) {
      const VecS rhs =
          vec_add(vec_scale(mu_back, c1.values.at(gen)),
                  vec_sub(rho0(sig, gen).apply(w_back), w_back));
      CHECK(c2.values.at(gen) == rhs);
    }
  }
  SUBCASE("zero against a non-coboundary assignment is infeasible") {
    auto c2 = zero_cocycle(sig);
    c2.values[{Family::A, 1}][1] = Scalar(1);  // not principal
    REQUIRE_FALSE(is_coboundary(c2).has_value());
    CHECK_FALSE(cohomologous_mod_scalar(zero_cocycle(sig), c2).has_value());
  }
  SUBCASE("signature mismatch throws") {
    CHECK_THROWS_AS(
        cohomologous_mod_scalar(zero_cocycle(sig), zero_cocycle({3, 0, 0})),
        std::invalid_argument);
  }
}

TEST_CASE("phi_c construction") {
  const SurfaceSig sig{2, 0, 0};
  Rng rng(16);
  SUBCASE("zero cocycle gives the block-diagonal extension") {
    const auto rep = symplectic_plus_trivial(sig);
    CHECK(rep.dim == 5);
    for (const auto& gen : generator_set(sig))
      CHECK(rep.images.at(gen) ==
            diag_blocks({rho0(sig, gen), Matrix::identity(1)}));
    CHECK(check_relations(rep).empty());
  }
  SUBCASE("images satisfy the catalog relations exactly") {
    const auto rep = build_phi_c(principal_cocycle(sig, rng.vec(4)));
    CHECK(check_relations(rep).empty());
  }
  SUBCASE("conjugation by embed(w0, I) shifts by the coboundary") {
    const auto c = principal_cocycle(sig, rng.vec(4));
    const VecS w0 = rng.vec(4);
    const auto cprime = cocycle_sub(c, principal_cocycle(sig, w0));
    const Matrix e = block_embed(w0, Matrix::identity(4));
    const auto phi = build_phi_c(c), phip = build_phi_c(cprime);
    for (const auto& gen : generator_set(sig))
      CHECK(e * phi.images.at(gen) * inverse(e) == phip.images.at(gen));
  }
  SUBCASE("conjugation by embed(0, zI) scales the cocycle") {
    const auto c = principal_cocycle(sig, rng.vec(4));
    const Scalar z = rng.nonzero_scalar();
    const Matrix a = block_embed(VecS(4, Scalar(0)), z * Matrix::identity(4));
    const auto phi = build_phi_c(c), phiz = build_phi_c(cocycle_scale(z, c));
    for (const auto& gen : generator_set(sig))
      CHECK(a * phi.images.at(gen) * inverse(a) == phiz.images.at(gen));
  }
  SUBCASE("inconsistent assignments are refused with the violation list") {
    CrossedHomData c{sig, {}};
    for (const auto& gen : generator_set(sig)) c.values[gen] = rng.vec(4);
    REQUIRE(!check_cocycle_on_relations(c).empty());
    CHECK_THROWS_AS(build_phi_c(c), CocycleInconsistentError);
    try {
      build_phi_c(c);
    } catch (const CocycleInconsistentError& e) {
      CHECK(!e.violations().empty());
    }
  }
  SUBCASE("dual images flip the nonzero corner exactly where c is nonzero") {
    const auto c = principal_cocycle(
        sig, VecS{Scalar(1), Scalar(0), Scalar(0), Scalar(0)});
    const auto rep = build_phi_c(c);
    for (const auto& gen : generator_set(sig)) {
      const Matrix d = dual_rep(rep.images.at(gen));
      bool lower_nonzero = false;
      for (std::size_t j = 0; j < 4; ++j) {
        CHECK(d.at(j, 4).is_zero());
        if (!d.at(4, j).is_zero()) lower_nonzero = true;
      }
      CHECK(lower_nonzero == !vec_is_zero(c.values.at(gen)));
      CHECK(dual_rep(d) == rep.images.at(gen));
    }
  }
}

TEST_CASE("word evaluation under a representation") {
  const SurfaceSig sig{2, 0, 0};
  const auto rep = symplectic_plus_trivial(sig);
  CHECK(rep_word(rep, parse_word("a1 b1 a1")) ==
        rep_word(rep, parse_word("b1 a1 b1")));
  CHECK(rep_word(rep, parse_word("c1^-1 c1")) == Matrix::identity(5));
  CHECK_THROWS_AS(rep_word(rep, parse_word("e1")), std::invalid_argument);
}

TEST_CASE("cocycle extension agrees with the matrix route") {
  // phi_c(w) = ((rho0(w), extend(w)), (0, 1)) must hold on whole words, not
  // just generators: the extension rule is exactly block multiplication
  Rng rng(25);
  for (int g = 2; g <= 4; ++g) {
    const SurfaceSig sig{g, 0, 0};
    const auto gens = generator_set(sig);
    const auto c = principal_cocycle(sig, rng.vec(2 * g));
    const auto rep = build_phi_c(c);
    for (int t = 0; t < 8; ++t) {
      const TwistWord w = seeded_word(rng, gens, 6);
      CHECK(rep_word(rep, w) ==
            block_embed(extend_cocycle(c, w), rho0_word(sig, w)));
    }
  }
}

TEST_CASE("relations hold on surfaces with boundary and punctures") {
  const SurfaceSig sig{3, 2, 1};
  CHECK(check_relations(symplectic_rep(sig)).empty());
  CHECK(check_relations(symplectic_plus_trivial(sig)).empty());
  Rng rng(26);
  CHECK(check_relations(build_phi_c(principal_cocycle(sig, rng.vec(6))))
            .empty());
}
