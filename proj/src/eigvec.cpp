// SPDX-License-Identifier: MIT

#include "looplab/eigvec.hpp"

#include "looplab/errors.hpp"
#include "looplab/linalg.hpp"

namespace looplab {

Pattern fundamental_pattern(Kind kind, int L) {
  Pattern p;
  p.kind = kind;
  p.L = L;
  p.defect = 0;
  p.m.assign(static_cast<size_t>(L), 0);
  if (kind == Kind::Odd) {
    // rainbow: i paired with L+1-i, the middle point carries the defect
    if (L % 2 != 1) throw SizeParityMismatch("odd kind needs an odd size");
    for (int i = 1; i <= L; ++i) p.m[static_cast<size_t>(i) - 1] = L + 1 - i;
    p.defect = (L + 1) / 2;
    p.m[static_cast<size_t>(p.defect) - 1] = 0;
  } else if (kind == Kind::EvenIC) {
    // fully nested: i paired with L+1-i
    if (L % 2 != 0 || L == 0) throw SizeParityMismatch("even kind needs an even size");
    for (int i = 1; i <= L; ++i) p.m[static_cast<size_t>(i) - 1] = L + 1 - i;
  } else {
    // nested around the puncture, the innermost arch separating it from the
    // boundary stretch between n and n+1
    if (L % 2 != 0 || L == 0) throw SizeParityMismatch("even kind needs an even size");
    for (int i = 1; i <= L / 2; ++i) p.m[static_cast<size_t>(i) - 1] = 1 - 2 * i;
    for (int i = L / 2 + 1; i <= L; ++i) p.m[static_cast<size_t>(i) - 1] = 2 * L + 1 - 2 * i;
  }
  validate_pattern(p);
  return p;
}

namespace {

// one pair factor (q z_j - q^{-1} z_i)/(q - q^{-1}) for i < j, with the
// leading coefficient substituted when a site sits at infinity
Cyc pair_factor(const Site& a, const Site& b) {
  const Cyc q = Cyc::q(), qi = Cyc::q_inv();
  const Cyc scale = (q - qi).inv();
  if (a.at_infinity && b.at_infinity) throw ConfigError("two sites at infinity");
  if (b.at_infinity) return q * scale;
  if (a.at_infinity) return (Cyc() - qi) * scale;
  return (q * b.z - qi * a.z) * scale;
}

}  // namespace

Cyc fundamental_value(Kind kind, const std::vector<Site>& sites) {
  const size_t L = sites.size();
  Cyc r = Cyc::one();
  if (kind == Kind::EvenIC) {
    if (L % 2 != 0 || L == 0) throw SizeParityMismatch("even kind needs an even size");
    size_t n = L / 2;
    for (size_t blk = 0; blk < 2; ++blk)
      for (size_t i = blk * n; i < (blk + 1) * n; ++i)
        for (size_t j = i + 1; j < (blk + 1) * n; ++j) r *= pair_factor(sites[i], sites[j]);
    return r;
  }
  if (kind == Kind::Odd && L % 2 != 1) throw SizeParityMismatch("odd kind needs an odd size");
  if (kind == Kind::Punctured && (L % 2 != 0 || L == 0))
    throw SizeParityMismatch("even kind needs an even size");
  for (size_t i = 0; i < L; ++i)
    for (size_t j = i + 1; j < L; ++j) r *= pair_factor(sites[i], sites[j]);
  return r;
}

namespace {

std::vector<Cyc> unit_kernel(const Basis& basis, const std::vector<Site>& sites) {
  const long tcands[] = {13, 17, 19, 23, 29};
  Matrix<Cyc> stacked;
  for (long tv : tcands) {
    Matrix<Cyc> T;
    try {
      T = build_transfer(basis, sites, Cyc(tv));
    } catch (const SingularEvaluation&) {
      continue;
    }
    for (size_t i = 0; i < basis.size(); ++i) T[i][i] -= Cyc::one();
    for (auto& row : T) stacked.push_back(std::move(row));
    auto ker = kernel_basis(stacked);
    if (ker.size() == 1) return ker[0];
    if (ker.empty()) throw DegeneratePoint("transfer matrix has no unit eigenvector");
    // kernel too big at this parameter; stack another one and retry
  }
  throw DegeneratePoint("ground state not isolated at the sampled parameters");
}

}  // namespace

EigvecRecord ground_state(Kind kind, const std::vector<Site>& sites) {
  int infs = 0;
  for (const Site& s : sites) infs += s.at_infinity ? 1 : 0;
  if (infs > 1) throw ConfigError("two sites at infinity");
  Basis basis = make_basis(kind, static_cast<int>(sites.size()));
  std::vector<Cyc> v = unit_kernel(basis, sites);
  int bi = basis.find(fundamental_pattern(kind, basis.L));
  if (v[static_cast<size_t>(bi)].is_zero())
    throw BaseComponentZero("fundamental component of the kernel vector vanishes");
  Cyc scale = fundamental_value(kind, sites) / v[static_cast<size_t>(bi)];
  for (Cyc& c : v) c *= scale;
  EigvecRecord rec;
  rec.kind = kind;
  rec.L = basis.L;
  rec.sites = sites;
  rec.comp = std::move(v);
  rec.base_index = bi;
  return rec;
}

Cyc component_sum(const EigvecRecord& v) {
  Cyc s;
  for (const Cyc& c : v.comp) s += c;
  return s;
}

std::vector<Int> homogeneous_components(Kind kind, int L) {
  std::vector<Site> sites(static_cast<size_t>(L), site(Cyc::one()));
  EigvecRecord rec = ground_state(kind, sites);
  std::vector<Int> out;
  out.reserve(rec.comp.size());
  for (const Cyc& c : rec.comp) out.push_back(rat_to_int_exact(c.rational_value()));
  return out;
}

}  // namespace looplab
