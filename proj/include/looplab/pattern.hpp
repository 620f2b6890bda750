// SPDX-License-Identifier: MIT
//
// Connectivity states of the dense loop model on a semi-infinite cylinder:
//   Odd       L = 2n+1 boundary points, one unmatched point (the defect),
//             noncrossing arches between the rest.
//   EvenIC    L = 2n, noncrossing arches, the two sides of the cylinder
//             identified (no winding data).
//   Punctured L = 2n, arches distinguished by which side of the puncture
//             they pass: stored as odd offsets d(i) with M(i) = i + d(i)
//             a noncrossing involution on the universal cover.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "looplab/cyc.hpp"
#include "looplab/errors.hpp"

namespace looplab {

enum class Kind { Odd, EvenIC, Punctured };

std::string kind_to_string(Kind k);
Kind kind_from_string(const std::string& s);

struct Pattern {
  Kind kind = Kind::Odd;
  int L = 0;
  int defect = 0;      // Odd only: the unmatched label in 1..L
  std::vector<int> m;  // Odd/EvenIC: partner labels, 0 at the defect.
                       // Punctured: odd offsets d(i).

  friend bool operator==(const Pattern& a, const Pattern& b) {
    return a.kind == b.kind && a.L == b.L && a.defect == b.defect && a.m == b.m;
  }
};

// Throws SizeParityMismatch / OffsetOverflow / ConfigError on invalid input.
void validate_pattern(const Pattern& p);

// Canonical serialized form; also the sort key for basis order.
std::string serialize_pattern(const Pattern& p);

// Partner of cover point c (Punctured patterns; c may be any integer).
int cover_partner(const Pattern& p, int c);

// Representative of a cover coordinate in 1..L.
int base_label(int c, int L);

// Mirror image under i -> L+1-i.
Pattern reflect(const Pattern& p);

struct Basis {
  Kind kind;
  int L;
  std::vector<Pattern> pats;
  std::map<std::string, int> index;

  size_t size() const { return pats.size(); }
  int find(const Pattern& p) const;
};

// All patterns of the given kind and size, in canonical order. Counts:
// Odd: binomial(L, (L-1)/2); EvenIC: Catalan(L/2); Punctured: binomial(L, L/2).
Basis make_basis(Kind kind, int L);

// Relabel i -> i+1 (mod L).
Pattern rotate(const Pattern& p);
Pattern rotate_inv(const Pattern& p);

struct EResult {
  Pattern pat;
  int contractible = 0;
  int wrapping = 0;
};

// Temperley-Lieb generator acting at the cyclic bond (i, i+1), i in 1..L.
EResult apply_e(int i, const Pattern& p);

// Grow a pattern of size L-2 by a contractible little arch occupying labels
// (i, i+1) of the result, i in 1..L-1 (linear position; not across the seam).
Pattern insert_little_arch(int i, const Pattern& p);

// Number of closed loops formed by gluing the two patterns along their
// boundary (mirror pairing); the defect lines of two Odd patterns join into
// one open path which is not counted.
int paste_loops(const Pattern& a, const Pattern& b);

struct PatLin {
  std::map<std::string, std::pair<Pattern, Cyc>> terms;
  void add(const Pattern& p, const Cyc& c);
  Cyc coeff_sum() const;
};

// Add one boundary point labelled L+1 between L and 1 and connect it to the
// cylinder axis: to the defect across the disk (Odd input, EvenIC output) or
// to the puncture (Punctured input, Odd output). Crossings with existing
// arches resolve by the skein rule; to_infinity selects the opposite
// crossing sense.
PatLin project_up(const Pattern& p, bool to_infinity);

}  // namespace looplab
