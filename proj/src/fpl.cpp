// SPDX-License-Identifier: MIT

#include "looplab/fpl.hpp"

#include <array>

#include "looplab/eigvec.hpp"
#include "looplab/errors.hpp"
#include "looplab/rat.hpp"
#include "looplab/schur.hpp"

namespace looplab {

bool stub_occupied(int k) { return k % 2 == 1; }

namespace {

// Internal edge ids: h(r,c) is the edge right of vertex (r,c), c < L;
// v(r,c) the edge below, r < L. The half turn maps each edge to a distinct
// partner (no edge is self-paired, for either parity of L).
struct Enumerator {
  int L;
  int H;  // count of h edges
  int E;
  bool symmetric;
  std::vector<int8_t> state;  // -1 unset
  std::vector<int> rot;
  const std::function<void(const FplConfig&)>* sink;

  Enumerator(int L_, bool sym) : L(L_), H(L_ * (L_ - 1)), E(2 * L_ * (L_ - 1)),
                                 symmetric(sym), state(E, int8_t(-1)), rot(E) {
    for (int r = 1; r <= L; ++r)
      for (int c = 1; c < L; ++c) rot[hid(r, c)] = hid(L + 1 - r, L - c);
    for (int r = 1; r < L; ++r)
      for (int c = 1; c <= L; ++c) rot[vid(r, c)] = vid(L - r, L + 1 - c);
  }

  int hid(int r, int c) const { return (r - 1) * (L - 1) + (c - 1); }
  int vid(int r, int c) const { return H + (r - 1) * L + (c - 1); }

  // stub index in 1..4L, counterclockwise from the top-left
  int stub(int r, int c, int dir) const {  // 0 L, 1 D, 2 R, 3 U
    switch (dir) {
      case 0: return r;
      case 1: return L + c;
      case 2: return 2 * L + (L + 1 - r);
      default: return 3 * L + (L + 1 - c);
    }
  }

  void set(int e, int8_t val) {
    state[e] = val;
    if (symmetric) state[rot[e]] = val;
  }
  void unset(int e) {
    state[e] = -1;
    if (symmetric) state[rot[e]] = -1;
  }

  void emit() {
    FplConfig cfg;
    cfg.L = L;
    for (int e = 0; e < H; ++e)
      if (state[e] == 1) cfg.h |= 1ull << e;
    for (int e = H; e < E; ++e)
      if (state[e] == 1) cfg.v |= 1ull << (e - H);
    (*sink)(cfg);
  }

  void dfs(int vi) {
    if (vi == L * L) {
      emit();
      return;
    }
    int r = vi / L + 1, c = vi % L + 1;
    int occ = 0, nfree = 0;
    std::array<int, 2> free_ids{};
    occ += c == 1 ? stub_occupied(stub(r, c, 0)) : state[hid(r, c - 1)];
    occ += r == 1 ? stub_occupied(stub(r, c, 3)) : state[vid(r - 1, c)];
    if (c == L)
      occ += stub_occupied(stub(r, c, 2));
    else if (state[hid(r, c)] >= 0)
      occ += state[hid(r, c)];
    else
      free_ids[nfree++] = hid(r, c);
    if (r == L)
      occ += stub_occupied(stub(r, c, 1));
    else if (state[vid(r, c)] >= 0)
      occ += state[vid(r, c)];
    else
      free_ids[nfree++] = vid(r, c);
    int need = 2 - occ;
    if (need < 0 || need > nfree) return;
    if (nfree == 0) {
      dfs(vi + 1);
      return;
    }
    if (nfree == 1) {
      set(free_ids[0], static_cast<int8_t>(need));
      dfs(vi + 1);
      unset(free_ids[0]);
      return;
    }
    for (int a = 0; a <= 1; ++a) {
      int b = need - a;
      if (b < 0 || b > 1) continue;
      set(free_ids[0], static_cast<int8_t>(a));
      set(free_ids[1], static_cast<int8_t>(b));
      dfs(vi + 1);
      unset(free_ids[1]);
      unset(free_ids[0]);
    }
  }
};

void run_enum(int L, bool symmetric, const std::function<void(const FplConfig&)>& sink) {
  if (L < 1 || L > 7) throw ConfigError("grid size out of range");
  Enumerator en(L, symmetric);
  en.sink = &sink;
  en.dfs(0);
}

}  // namespace

void enumerate_fpl(int L, const std::function<void(const FplConfig&)>& sink) {
  run_enum(L, false, sink);
}

void enumerate_htsfpl(int L, const std::function<void(const FplConfig&)>& sink) {
  run_enum(L, true, sink);
}

long count_fpl(int L) {
  long n = 0;
  enumerate_fpl(L, [&](const FplConfig&) { ++n; });
  return n;
}

long count_htsfpl(int L) {
  long n = 0;
  enumerate_htsfpl(L, [&](const FplConfig&) { ++n; });
  return n;
}

namespace {

// 0 Left, 1 Down, 2 Right, 3 Up
constexpr int kDr[4] = {0, 1, 0, -1};
constexpr int kDc[4] = {-1, 0, 1, 0};
constexpr int kOpp[4] = {2, 3, 0, 1};

struct Tracer {
  const FplConfig& cfg;
  int L;

  explicit Tracer(const FplConfig& c) : cfg(c), L(c.L) {}

  bool boundary(int r, int c, int dir) const {
    return (dir == 0 && c == 1) || (dir == 1 && r == L) ||
           (dir == 2 && c == L) || (dir == 3 && r == 1);
  }

  int stub(int r, int c, int dir) const {
    switch (dir) {
      case 0: return r;
      case 1: return L + c;
      case 2: return 2 * L + (L + 1 - r);
      default: return 3 * L + (L + 1 - c);
    }
  }

  bool occupied(int r, int c, int dir) const {
    if (boundary(r, c, dir)) return stub_occupied(stub(r, c, dir));
    switch (dir) {
      case 0: return cfg.h_occ(r, c - 1);
      case 1: return cfg.v_occ(r, c);
      case 2: return cfg.h_occ(r, c);
      default: return cfg.v_occ(r - 1, c);
    }
  }

  // vertex and outward direction of boundary point j (occupied stub 2j-1)
  void point_site(int j, int& r, int& c, int& dir) const {
    int k = 2 * j - 1;
    if (k <= L) {
      r = k, c = 1, dir = 0;
    } else if (k <= 2 * L) {
      r = L, c = k - L, dir = 1;
    } else if (k <= 3 * L) {
      r = L + 1 - (k - 2 * L), c = L, dir = 2;
    } else {
      r = 1, c = L + 1 - (k - 3 * L), dir = 3;
    }
  }

  // walks the open path from boundary point j; fills the polyline with
  // vertex positions (x = column, y = row) including the stub endpoints,
  // and returns the boundary point at the far end
  int trace(int j, std::vector<std::pair<Rat, Rat>>& poly) const {
    int r, c, dir;
    point_site(j, r, c, dir);
    poly.clear();
    poly.emplace_back(Rat(c + kDc[dir]), Rat(r + kDr[dir]));
    int in = dir;  // direction of the edge we arrived along, seen from (r,c)
    for (;;) {
      poly.emplace_back(Rat(c), Rat(r));
      int out = -1;
      for (int d = 0; d < 4; ++d) {
        if (d == in) continue;
        if (occupied(r, c, d)) {
          if (out >= 0) throw TracingInconsistency("vertex with more than two occupied edges");
          out = d;
        }
      }
      if (out < 0) throw TracingInconsistency("vertex with fewer than two occupied edges");
      if (boundary(r, c, out)) {
        poly.emplace_back(Rat(c + kDc[out]), Rat(r + kDr[out]));
        int k = stub(r, c, out);
        return (k + 1) / 2;
      }
      r += kDr[out];
      c += kDc[out];
      in = kOpp[out];
    }
  }

  // signed crossings of the polyline with the cut ray from the grid center
  // through (1/2, 0); positive in the direction of increasing boundary
  // index. Used for even L only, where the center is a face and the ray
  // avoids all vertices and stub endpoints.
  int winding(const std::vector<std::pair<Rat, Rat>>& poly) const {
    Rat cx = Rat(L + 1) / 2, cy = Rat(L + 1) / 2;
    Rat dx = Rat(1) / 2 - cx, dy = -cy;
    int w = 0;
    for (size_t i = 0; i + 1 < poly.size(); ++i) {
      const auto& [px, py] = poly[i];
      const auto& [qx, qy] = poly[i + 1];
      if (px == qx) {
        Rat s = (px - cx) / dx;
        if (!(s > 0)) continue;
        Rat y = cy + s * dy;
        if (y > std::min(py, qy) && y < std::max(py, qy)) w += qy > py ? 1 : -1;
      } else {
        Rat s = (py - cy) / dy;
        if (!(s > 0)) continue;
        Rat x = cx + s * dx;
        if (x > std::min(px, qx) && x < std::max(px, qx)) w += qx > px ? -1 : 1;
      }
    }
    return w;
  }
};

}  // namespace

Pattern extract_link_pattern(const FplConfig& cfg, bool symmetric) {
  Tracer tr(cfg);
  const int L = cfg.L;
  const int P = 2 * L;
  std::vector<int> match(static_cast<size_t>(P) + 1, 0);
  std::vector<int> wind(static_cast<size_t>(P) + 1, 0);
  std::vector<std::pair<Rat, Rat>> poly;
  for (int j = 1; j <= P; ++j) {
    int k = tr.trace(j, poly);
    match[static_cast<size_t>(j)] = k;
    if (symmetric && L % 2 == 0) wind[static_cast<size_t>(j)] = tr.winding(poly);
  }
  for (int j = 1; j <= P; ++j) {
    int k = match[static_cast<size_t>(j)];
    if (k < 1 || k > P || k == j || match[static_cast<size_t>(k)] != j)
      throw TracingInconsistency("boundary matching is not an involution");
  }

  Pattern p;
  if (!symmetric) {
    p.kind = Kind::EvenIC;
    p.L = P;
    p.m.assign(static_cast<size_t>(P), 0);
    for (int j = 1; j <= P; ++j) p.m[static_cast<size_t>(j) - 1] = match[static_cast<size_t>(j)];
    try {
      validate_pattern(p);
    } catch (const Error&) {
      throw TracingInconsistency("traced matching is not noncrossing");
    }
    return p;
  }

  for (int j = 1; j <= P; ++j) {
    int jr = j + L > P ? j - L : j + L;
    int mr = match[static_cast<size_t>(j)] + L;
    if (mr > P) mr -= P;
    if (match[static_cast<size_t>(jr)] != mr)
      throw AsymmetricConfig("boundary matching lacks the half-turn symmetry");
  }

  p.L = L;
  p.m.assign(static_cast<size_t>(L), 0);
  if (L % 2 == 1) {
    p.kind = Kind::Odd;
    int diameters = 0;
    for (int j = 1; j <= P; ++j) {
      int k = match[static_cast<size_t>(j)];
      int pj = (j - 1) % L + 1, pk = (k - 1) % L + 1;
      if (pj == pk) {  // the self-symmetric path through the center
        if (j < k) ++diameters;
        p.defect = pj;
        continue;
      }
      int& slot = p.m[static_cast<size_t>(pj) - 1];
      if (slot != 0 && slot != pk)
        throw TracingInconsistency("descended arches disagree between lifts");
      slot = pk;
    }
    if (diameters != 1)
      throw TracingInconsistency("odd symmetric config needs exactly one diameter path");
  } else {
    p.kind = Kind::Punctured;
    for (int i = 1; i <= L; ++i)
      p.m[static_cast<size_t>(i) - 1] =
          match[static_cast<size_t>(i)] + P * wind[static_cast<size_t>(i)] - i;
  }
  try {
    validate_pattern(p);
  } catch (const Error&) {
    throw TracingInconsistency("descended matching is not a valid pattern");
  }
  return p;
}

CensusTable census(int L, bool symmetric) {
  CensusTable t;
  t.L = L;
  t.symmetric = symmetric;
  auto sink = [&](const FplConfig& c) {
    ++t.counts[serialize_pattern(extract_link_pattern(c, symmetric))];
    ++t.total;
  };
  if (symmetric)
    enumerate_htsfpl(L, sink);
  else
    enumerate_fpl(L, sink);
  return t;
}

std::vector<CheckResult> census_compare(int L) {
  std::vector<CheckResult> out;
  CensusTable t = census(L, true);
  Kind kind = L % 2 == 1 ? Kind::Odd : Kind::Punctured;
  Basis basis = make_basis(kind, L);
  std::vector<Int> hom = homogeneous_components(kind, L);

  auto lookup = [&](const Pattern& p) -> long {
    auto it = t.counts.find(serialize_pattern(p));
    return it == t.counts.end() ? 0 : it->second;
  };

  out.push_back({"fpl-census-total", Int(t.total) == aht_count(L), false,
                 "census total " + std::to_string(t.total)});

  bool orbit = true;
  for (const Pattern& p : basis.pats) orbit = orbit && lookup(p) == lookup(rotate(p));
  out.push_back({"fpl-census-rotation-invariant", orbit, false,
                 "counts constant on rotation orbits"});

  int offset = -1;
  for (int r = 0; r < L && offset < 0; ++r) {
    bool all = true;
    for (size_t k = 0; k < basis.size() && all; ++k) {
      Pattern p = basis.pats[k];
      for (int s = 0; s < r; ++s) p = rotate(p);
      all = Int(lookup(p)) == hom[k];
    }
    if (all) offset = r;
  }
  out.push_back({"fpl-census-match", offset >= 0, true,
                 offset >= 0 ? "components match at rotation offset " + std::to_string(offset)
                             : "no rotation offset matches"});
  return out;
}

std::string render_config(const FplConfig& c) {
  const int L = c.L;
  std::string out;
  for (int r = 1; r <= L; ++r) {
    std::string row, below;
    for (int cc = 1; cc <= L; ++cc) {
      row += '+';
      if (cc < L) row += c.h_occ(r, cc) ? "--" : "  ";
      if (r < L) {
        below += c.v_occ(r, cc) ? '|' : ' ';
        if (cc < L) below += "  ";
      }
    }
    out += row + '\n';
    if (r < L) out += below + '\n';
  }
  return out;
}

}  // namespace looplab
