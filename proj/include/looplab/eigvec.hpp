// SPDX-License-Identifier: MIT
//
// Exact ground-state eigenvectors of the one-row transfer matrices. The
// eigenvalue is 1 (column sums are 1); the eigenvector is normalized so that
// the fundamental component equals its product formula, which makes every
// component a polynomial in the site parameters.
#pragma once

#include <vector>

#include "looplab/cyc.hpp"
#include "looplab/pattern.hpp"
#include "looplab/rat.hpp"
#include "looplab/transfer.hpp"

namespace looplab {

struct EigvecRecord {
  Kind kind = Kind::Odd;
  int L = 0;
  std::vector<Site> sites;
  std::vector<Cyc> comp;  // canonical basis order
  int base_index = -1;    // position of the fundamental pattern
};

// The pattern whose component carries the product formula.
Pattern fundamental_pattern(Kind kind, int L);

// Product formula for the fundamental component. At most one site may sit at
// infinity; each pair factor involving it is replaced by its leading
// coefficient.
Cyc fundamental_value(Kind kind, const std::vector<Site>& sites);

// Solves (T - 1)v = 0 exactly and applies the normalization above.
// DegeneratePoint if the common kernel is not one-dimensional,
// BaseComponentZero if the fundamental component of the solution vanishes.
EigvecRecord ground_state(Kind kind, const std::vector<Site>& sites);

Cyc component_sum(const EigvecRecord& v);

// Components at z = (1,...,1), as exact integers.
std::vector<Int> homogeneous_components(Kind kind, int L);

}  // namespace looplab
