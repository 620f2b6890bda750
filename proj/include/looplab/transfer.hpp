// SPDX-License-Identifier: MIT
//
// One-row transfer matrices on the cylinder state spaces. A row is a word of
// L quarter-turn tiles; every tile routes its south and north ports to the
// two horizontal ports it touches, so strands are traced through neighbouring
// faces only. Sites sit at a finite point or at infinity (entrywise limit of
// the face weights).
#pragma once

#include <utility>
#include <vector>

#include "looplab/cyc.hpp"
#include "looplab/linalg.hpp"
#include "looplab/pattern.hpp"

namespace looplab {

struct Site {
  bool at_infinity = false;
  Cyc z;
};

Site site(const Cyc& z);
Site site_inf();
std::vector<Site> sites_from(const std::vector<Cyc>& z);

// (p, 1-p) with p = (q z - q^{-1} t)/(q t - q^{-1} z); the pair sums to 1.
// Throws SingularEvaluation when t = q z (denominator zero). At an infinite
// site the pair is the entrywise limit (-q^{-1}, -q).
std::pair<Cyc, Cyc> face_weights(const Site& s, const Cyc& t);

struct RowResult {
  Pattern pat;
  int contractible = 0;
  int wrapping = 0;
};

// Applies one row to a pattern. word[x-1] picks the tile of face x:
// false = left tile (south->west, north->east), true = right tile.
RowResult apply_row(const std::vector<bool>& word, const Pattern& p);

// Transfer matrix in the canonical order of `basis`. Requires
// sites.size() == basis.L. Closed loops carry weight 1 here.
Matrix<Cyc> build_transfer(const Basis& basis, const std::vector<Site>& sites, const Cyc& t);

}  // namespace looplab
