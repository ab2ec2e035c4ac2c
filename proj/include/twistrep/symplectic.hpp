#pragma once

#include "twistrep/matrix.hpp"
#include "twistrep/surface.hpp"

namespace twistrep {

// U = ((1,1),(0,1)), the elementary transvection block
Matrix mat_U();
// Uhat = ((1,0),(-1,1))
Matrix mat_Uhat();
// L = ((1,1,0,-1),(0,1,0,0),(0,-1,1,1),(0,0,0,1)), the chain-twist 4x4 block
Matrix mat_L();

/*
 * Block-diagonal images of the twist generators on the homology basis
 * (x_1, y_1, ..., x_g, y_g):
 *   A_i = diag(..., U, ...), B_i = diag(..., Uhat, ...)  (block i),
 *   C_k = diag(I_{2k-2}, L, I_{2g-2k-2}).
 * These definitions are the reference against which the Picard-Lefschetz
 * route below is checked.
 */
Matrix def_A(int g, int i);
Matrix def_B(int g, int i);
Matrix def_C(int g, int k);

// intersection form J with <x_i, y_i> = +1, <y_i, x_i> = -1
Matrix symplectic_form(int g);

bool is_symplectic(const Matrix& m, const Matrix& j);  // t(M) J M == J

/*
 * Transvection x |-> x + <v, x> v of the Picard-Lefschetz action.
 * Depends on v only up to sign.
 */
Matrix pl_twist_matrix(const VecS& v);

/*
 * Homology class of each catalog curve on the basis (x_1, y_1, ..., x_g, y_g):
 * a_i -> x_i, b_i -> y_i, c_k -> x_k - x_{k+1}, e_j -> x_1, f_j -> x_1
 * (classes fixed up to sign, which the transvection cannot see).
 */
VecS curve_class(const SurfaceSig& sig, const GeneratorId& gen);

// symplectic representation on generators: the transvection of curve_class
Matrix rho0(const SurfaceSig& sig, const GeneratorId& gen);

// homomorphic extension to words
Matrix rho0_word(const SurfaceSig& sig, const TwistWord& w);

/*
 * Image G of the 1/g-rotation: I_2 in the top right, I_{2g-2} in the lower
 * left. Satisfies t(G) = G^{-1}, G^g = I, and conjugation shifts the block
 * index of A_i, B_i (mod g) and of C_k (2 <= k <= g-1) down by one.
 */
Matrix rotation_G(int g);

// semidirect-product embedding ((A, z), (0, 1)) into GL(n+1)
Matrix block_embed(const VecS& z, const Matrix& a);

// dual representation image: transpose-inverse
Matrix dual_rep(const Matrix& m);

}  // namespace twistrep
