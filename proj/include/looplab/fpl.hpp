// SPDX-License-Identifier: MIT
//
// Brute-force enumeration of fully packed loop configurations on the L x L
// vertex grid, plain and half-turn symmetric, boundary link pattern
// extraction by path tracing, and the census comparison against the exact
// homogeneous eigenvector components.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>

#include "looplab/pattern.hpp"
#include "looplab/verify.hpp"

namespace looplab {

// Occupancy of the internal edges; the external stubs are fixed by the
// alternating boundary condition and carried implicitly. Bit layout:
// edge right of vertex (r,c) at h bit (r-1)(L-1)+(c-1), edge below (r,c)
// at v bit (r-1)L+(c-1). Rows count downward, columns rightward, 1-based.
struct FplConfig {
  int L = 0;
  std::uint64_t h = 0;
  std::uint64_t v = 0;

  bool h_occ(int r, int c) const {
    return (h >> ((r - 1) * (L - 1) + (c - 1))) & 1;
  }
  bool v_occ(int r, int c) const { return (v >> ((r - 1) * L + (c - 1))) & 1; }
};

// External stubs are indexed 1..4L counterclockwise from the top-left
// corner (left side first, downward); the odd ones are occupied. Occupied
// stub 2j-1 is boundary point j, j = 1..2L.
bool stub_occupied(int k);

// Exhaustive duplicate-free enumeration, vertex by vertex in raster order
// with degree feasibility pruning. L <= 7.
void enumerate_fpl(int L, const std::function<void(const FplConfig&)>& sink);

// Configurations invariant under the half turn, enumerated by assigning
// whole edge orbits; the rotation pairs every edge with a distinct partner.
void enumerate_htsfpl(int L, const std::function<void(const FplConfig&)>& sink);

long count_fpl(int L);
long count_htsfpl(int L);

// Boundary matching of the 2L points by path tracing. symmetric = false
// returns the plain noncrossing matching as an identified-connectivity
// pattern of size 2L. symmetric = true checks m(i+L) = m(i)+L (mod 2L)
// (AsymmetricConfig otherwise) and descends to the size-L cylinder: the
// diameter path becomes the defect for odd L; for even L the winding of
// each path around the grid center, counted as signed crossings with a cut
// ray passing between boundary points 2L and 1, yields the punctured
// pattern offsets. TracingInconsistency if the descent is not a valid
// pattern.
Pattern extract_link_pattern(const FplConfig& c, bool symmetric);

struct CensusTable {
  int L = 0;
  bool symmetric = false;
  std::map<std::string, long> counts;  // serialized pattern -> count
  long total = 0;
};

CensusTable census(int L, bool symmetric);

// Census against the homogeneous eigenvector components, allowing one
// global rotation offset between the two labeling conventions. The total
// is a proven count; the per-pattern match is the component conjecture.
std::vector<CheckResult> census_compare(int L);

// Small ASCII picture, one grid row per line.
std::string render_config(const FplConfig& c);

}  // namespace looplab
