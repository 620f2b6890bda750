// SPDX-License-Identifier: MIT
#include "looplab/tl.hpp"

namespace looplab {

Matrix<Cyc> build_rhat(const Basis& basis, int i, const Cyc& z, const Cyc& w) {
  Cyc den = Cyc::q() * w - Cyc::q_inv() * z;
  if (den.is_zero()) throw SingularEvaluation("check operator pole");
  Cyc a = (Cyc::q() * z - Cyc::q_inv() * w) / den;
  Cyc b = (z - w) / den;
  Matrix<Cyc> e = build_e_matrix<Cyc>(basis, i);
  size_t n = basis.size();
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c) {
      e[r][c] = b * e[r][c];
      if (r == c) e[r][c] += a;
    }
  return e;
}

Matrix<Cyc> build_projection_matrix(const Basis& from, const Basis& to,
                                    bool to_infinity) {
  if (to.L != from.L + 1)
    throw SizeParityMismatch("projection must grow the size by one");
  Matrix<Cyc> m(to.size(), std::vector<Cyc>(from.size(), Cyc()));
  for (size_t c = 0; c < from.size(); ++c) {
    PatLin lin = project_up(from.pats[c], to_infinity);
    for (const auto& [key, pc] : lin.terms)
      m[static_cast<size_t>(to.find(pc.first))][c] += pc.second;
  }
  return m;
}

}  // namespace looplab
