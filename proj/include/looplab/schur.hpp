// SPDX-License-Identifier: MIT
//
// Exact Schur polynomial evaluation, the staircase shapes entering the sum
// rules, dimension/counting formulas, and the pairing determinant used for
// the fundamental punctured component.
#pragma once

#include <vector>

#include "looplab/cyc.hpp"
#include "looplab/mpoly.hpp"
#include "looplab/rat.hpp"

namespace looplab {

using Partition = std::vector<int>;  // weakly decreasing, nonnegative

void validate_partition(const Partition& lambda);

// Double staircase (n, n, n-1, n-1, ..., 1, 1).
Partition staircase_paired(int n);
// (n, n-1, n-1, ..., 1, 1): the paired staircase with its first row removed.
Partition staircase_clipped(int n);
// (n-1, n-1, ..., 1, 1).
Partition staircase_lower(int n);

// s_lambda(z_1..z_N), division-free in the points (valid at repeated points).
Cyc schur_eval(const Partition& lambda, const std::vector<Cyc>& z);

// Bialternant form; requires pairwise distinct points (SingularEvaluation).
Cyc schur_eval_bialternant(const Partition& lambda, const std::vector<Cyc>& z);

// Symbolic Schur polynomial in nvars variables.
MPoly schur_poly(const Partition& lambda, int nvars);

// Number of semistandard tableaux of shape lambda with entries <= N.
Int gl_dimension(const Partition& lambda, int N);

// Counting sequences (exact integers).
Int asm_count(int n);                 // 1, 1, 2, 7, 42, 429, ...
Int aht_count(int L);                 // half-turn symmetric count, size L >= 1
Int nn_squared(int n);                // square of the odd-spin sum constant
Int spin_sum_integer(int n);          // 3^{n/2} * that constant: 1, 3, 15, ...
Cyc nn_number(int n);                 // the constant itself, in the field

// Compares the product formula for aht_count with the independent
// Schur-dimension expression; true when they agree for all sizes <= L.
bool okada_check(int L);

// Pairing determinant of the two halves (z_1..z_{n+1} | z_{n+2}..z_{2n+2});
// requires pairwise distinct points within each half.
Cyc gaudin_eval(const std::vector<Cyc>& z);
// Last point at infinity: lim Z^{-n} G(z_1..z_{2n+1}, Z).
Cyc gaudin_eval_inf(const std::vector<Cyc>& z);

// Product form of the fundamental components.
Cyc base_product_odd(const std::vector<Cyc>& z);
Cyc base_product_evenic(const std::vector<Cyc>& z);
Cyc base_product_punctured(const std::vector<Cyc>& z);

// Fundamental component through the pairing determinant on 2n+1 points:
// base_product_punctured(z, 0) * gaudin_eval_inf(z).
Cyc theta_base_eval(const std::vector<Cyc>& z);

}  // namespace looplab
