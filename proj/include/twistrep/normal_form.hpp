#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twistrep/cocycle.hpp"
#include "twistrep/linalg.hpp"
#include "twistrep/matrix.hpp"

namespace twistrep {

/*
 * Failure record shared by the condition checks and the solvers.
 * stage is "i".."iv" for a violated condition, one of the named derivation
 * tags ("c_1".."c_16", "form_S", "form_W", "form_X0") for a solver stage, or
 * "final" for the assembled-form verification. For scalar facts, lhs/rhs are
 * 1x1 matrices; for condition (i) they are the characteristic-coefficient
 * rows (actual vs expected).
 */
struct SolveWitness {
  std::string stage;
  std::string detail;
  Matrix lhs, rhs;
};

enum class SolverRole { ChainK, Extra };

/*
 * Conditions (i)-(iv) on a candidate (2g+m)x(2g+m) image, against
 * At_i = diag(A_i, I_m), Bt_i = diag(B_i, I_m):
 *   (i)   char poly = (x-1)^{2g+m}
 *   (ii)  commutes with every At_i
 *   (iii) chain-k: commutes with Bt_j for j != k, k+1 (only meaningful g >= 3)
 *         extra:   commutes with Bt_j for 2 <= j <= g
 *   (iv)  chain-k: braids with Bt_k and Bt_{k+1}; extra: braids with Bt_1
 * Returns the first violated condition; m = 0 gives the 2g-dimensional
 * variant with no tail.
 */
std::optional<SolveWitness> condition_check(const Matrix& x, SolverRole role,
                                            int k, int g, int m);

/*
 * Conclusion data of the key lemma: after conjugating by
 * Pt = diag(I_2, p I_2, I_{2g-4}, I_m) the input becomes
 * ((C_1, W_1), (S_1, T)) with W_1 = t(w 0 -w 0 0), S_1 = (0 s 0 -s 0), and
 *   t(w) s = 0,  t(w) T = t(w),  T s = s,  T^2 - T = s t(w).
 */
struct KeyLemmaForm {
  int m = 1;
  Scalar p;
  VecS w, s;  // length m
  Matrix T;   // m x m
};

bool verify_key_lemma_identities(const KeyLemmaForm& f);

struct KeyLemmaResult {
  std::optional<SolveWitness> fail;
  KeyLemmaForm form;
  Matrix conjugator;  // Pt
  Matrix reduced;     // Pt^{-1} X Pt

  bool ok() const { return !fail.has_value(); }
};

/*
 * Replays the key-lemma derivation stage by stage on a (2g+m)x(2g+m) input
 * satisfying the chain-1 conditions; any violated identity fails with the
 * equation tag of the stage that found it.
 */
KeyLemmaResult key_lemma_solve(const Matrix& xt, int g, int m);

/*
 * The extra-generator form ((A_1, W), (S, T)) with W supported on row 1 and
 * S on column 2, same constraint set as the key lemma; no conjugation is
 * needed. For m = 1 additionally either w = 0 or s = 0 and the corner is 1.
 */
struct ExtraGenForm {
  int m = 1;
  VecS w, s;  // length m
  Matrix T;
};

struct ExtraGenResult {
  std::optional<SolveWitness> fail;
  ExtraGenForm form;

  bool ok() const { return !fail.has_value(); }
};

ExtraGenResult extra_gen_solve(const Matrix& ft, int g, int m);

/*
 * Normalized chain data: Pt^{-1} X_k Pt = ((C_k, w_k), (t(s_k), 1)) with,
 * for every k, w_k = 0 or s_k = 0 and supports confined to rows
 * 2k-1 .. 2k+2 (1-based).
 */
struct CanonicalChain {
  int g = 2;
  std::vector<Scalar> p_list;  // p_1 .. p_{g-1}; p_k scales block k+1
  std::vector<VecS> w, s;      // per k, length 2g
};

struct ChainResult {
  std::optional<SolveWitness> fail;
  int fail_k = 0;  // which X_k triggered the failure (1-based), 0 if none
  Matrix conjugator;  // Pt, of size 2g+1
  CanonicalChain chain;

  bool ok() const { return !fail.has_value(); }
};

/*
 * Iterative normalization of a full chain X_1 .. X_{g-1} in GL(2g+1):
 * solve X_1 by the key lemma, then rotate each later X_{k+1} into chain-1
 * position with the 1/g-rotation G, solve, and rotate back, accumulating
 * the diagonal conjugator Q = P_1 ... P_{g-1}.
 */
ChainResult normalize_chain(const std::vector<Matrix>& xs, int g);

struct Chain2gResult {
  std::optional<SolveWitness> fail;
  int fail_k = 0;
  Matrix conjugator;  // P, of size 2g
  std::vector<Scalar> p_list;

  bool ok() const { return !fail.has_value(); }
};

// 2g-dimensional analogue: P^{-1} X_k P = C_k exactly, no tail data
Chain2gResult normalize_chain_2g(const std::vector<Matrix>& xs, int g);

enum class BlockVerdict { TypeA, TypeB, NotBlockForm };

std::string to_string(BlockVerdict v);

/*
 * Dichotomy verdict on generator images of size 2g+1 that are already in a
 * normalized basis: TypeA when every image is ((F, w), (0, 1)), TypeB for
 * the transpose pattern. TypeA extracts the cocycle from last columns when
 * the F blocks equal the rho0 images; TypeB routes through the dual first.
 */
struct DichotomyResult {
  BlockVerdict verdict = BlockVerdict::NotBlockForm;
  std::optional<GeneratorId> witness;       // offending generator
  std::optional<CrossedHomData> extracted;  // present when F blocks match rho0
};

DichotomyResult classify_dichotomy(const GeneratorRep& rep);

/*
 * Twist-image eigen structure assertion: char poly (x-1)^{2g+1} and
 * dim ker(M - I) = 2g.
 */
struct EigenAssertion {
  bool pass = false;
  EigenReport report;
};

EigenAssertion assert_eigen_theorem(const GeneratorRep& rep,
                                    const GeneratorId& gen);

}  // namespace twistrep
