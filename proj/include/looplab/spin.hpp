// SPDX-License-Identifier: MIT
//
// The twisted spin chain side of the correspondence: six-vertex R matrix,
// inhomogeneous transfer matrix on a fixed-magnetization sector, the XXZ
// Hamiltonian at Delta = -1/2, the arch-to-spin intertwiner S, and the
// strand-adding maps between odd and even chains. Everything is evaluated
// in exact cyclotomic arithmetic at q = exp(4 pi i / 3).
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "looplab/cyc.hpp"
#include "looplab/laurent.hpp"
#include "looplab/linalg.hpp"
#include "looplab/pattern.hpp"
#include "looplab/verify.hpp"

namespace looplab {

// Spin words are bit masks: bit (i-1) set means spin up at site i. The basis
// holds one magnetization sector in ascending word order: popcount (L+1)/2
// (s_z = +1/2) for odd L, popcount L/2 (s_z = 0) for even L.
struct SpinBasis {
  int L = 0;
  int plus_count = 0;
  std::vector<std::uint32_t> words;

  std::size_t size() const { return words.size(); }
  // Index of a word, -1 if absent (wrong popcount).
  int find(std::uint32_t w) const;
};

SpinBasis make_spin_basis(int L);

// "+-+" style rendering, site 1 leftmost.
std::string spin_word_string(int L, std::uint32_t w);

// 4x4 R matrix on (site, auxiliary), basis ++, +-, -+, --, row = out state.
// R(z,z) is the swap. SingularEvaluation when q t - q^{-1} z = 0.
Matrix<Cyc> build_r_spin(const Cyc& z, const Cyc& t);

// Sector block of the twisted transfer matrix
//   T~(t | z_1..z_L) = tr_aux( B_1(z_1) B_2(z_2) ... B_L(z_L) Omega ),
// site 1 leftmost in the ordered product, with the boundary twist
// Omega = diag(-q, -q^{-1}) for even L and the identity for odd L.
// Magnetization is conserved, so the block is the whole story.
Matrix<Cyc> build_spin_transfer(const SpinBasis& basis,
                                const std::vector<Cyc>& z, const Cyc& t);

// H~ = -1/2 sum_i (sx sx + sy sy - 1/2 sz sz), periodic, with the hopping
// terms on the boundary bond (L,1) twisted by q^{-2} (up moves in) and q^2
// (up moves out) when L is even. Restricted to the sector of the basis.
Matrix<Cyc> xxz_hamiltonian(const SpinBasis& basis);

// Image of one link pattern under the intertwiner S: each arch (j,k),
// oriented so that the defect (odd case) is not enclosed on the side walked
// j -> k, contributes omega^{-1/2} |+>_j |->_k + omega^{1/2} |->_j |+>_k;
// the defect site carries |+>. SizeParityMismatch for punctured patterns
// or when sizes disagree.
std::vector<Cyc> map_S(const Pattern& p, const SpinBasis& basis);

// Columns are map_S over the pattern basis.
Matrix<Cyc> map_S_matrix(const Basis& from, const SpinBasis& to);

// Same matrix over the generic ring Z[i][s, s^{-1}], q = s^2, for rank
// statements away from the combinatorial point.
Matrix<LaurentG> map_S_matrix_generic(const Basis& from, const SpinBasis& to);

// Strand-adding injection Q |alpha> = |alpha -> appended minus>, from the
// odd chain of size to.L - 1 into the even chain. SizeParityMismatch when
// sizes or parities disagree.
Matrix<Cyc> map_Q(const SpinBasis& from, const SpinBasis& to);

// Diagonal projector onto the last site being + (plus = true) or -.
Matrix<Cyc> proj_P(const SpinBasis& basis, bool plus);

// Two-site Temperley-Lieb generator in the spin representation; satisfies
// e^2 = tau e and P R(z,w) = [(q z - q^{-1} w) + (z - w) e] / (q w - q^{-1} z).
Matrix<Cyc> spin_tl_generator();
Matrix<LaurentG> spin_tl_generator_generic();

struct SpinEigvec {
  int L = 0;
  std::vector<Cyc> z;
  SpinBasis basis;
  std::vector<Cyc> comp;  // order of basis.words
  int base_index = -1;    // fully separated word +..+-..-
};

// Product formula for the fully separated component. Odd L = 2n+1:
//   3^{n/2} omega^{-n/2} prod_{i<j<=n+1} (q z_j - q^{-1} z_i)/(q - q^{-1})
//     * prod_{n+1<i<j} (q z_j - q^{-1} z_i)/(q - q^{-1})
//     * prod_{i>n+1} (-q^{-1} z_i)/(q - q^{-1});
// even L = 2m: omega^{-m/2} times the identified-connectivity loop formula.
Cyc spin_base_value(int L, const std::vector<Cyc>& z);

// Solves (T~ - 1)v = 0 over several t and normalizes the fully separated
// component to spin_base_value. DegeneratePoint / BaseComponentZero as in
// the loop solver.
SpinEigvec spin_ground_state(const std::vector<Cyc>& z);

Cyc component_sum(const SpinEigvec& v);

// Components at z = (1,...,1). Exactly rational integers for odd L.
std::vector<Cyc> spin_homogeneous_components(int L);

// Identity checks at one point z: the intertwining T~ S = S T, the
// Schur-function factor between S Psi and Psi~ (odd), S Phi = Phi~ (even),
// the strand-adding transfer and eigenvector relations with their explicit
// constant (odd), plus-sector stability at z_{L+1} = 0, and the rank and
// kernel statements for S (size-capped).
std::vector<CheckResult> verify_spin_relations(int L, const std::vector<Cyc>& z);

// Component sum and squared sum against their Schur-product targets.
std::vector<CheckResult> verify_spin_sum_rules(const std::vector<Cyc>& z);

// Homogeneous-point checks: integer sum rules, the modulus-square sum,
// extremal components (conjectural targets), realness (odd), the
// conjugation/spin-flip symmetry (even), and the generic-ring bilinear
// pairing tau^{loops} for small even sizes.
std::vector<CheckResult> verify_spin_sum_rules_homogeneous(int L);

// Hamiltonian checks: commutation with the homogeneous transfer matrix,
// the ground-state energy -3L/4, and the conjugation/spin-reversal symmetry
// of the sector block (even L).
std::vector<CheckResult> verify_spin_hamiltonian(int L);

}  // namespace looplab
