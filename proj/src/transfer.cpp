// SPDX-License-Identifier: MIT

#include "looplab/transfer.hpp"

#include "looplab/errors.hpp"

namespace looplab {

namespace {

// Calibrated against the exchange relation R^_i(z_i,z_{i+1}) T(t|..z_i,z_{i+1}..)
// = T(t|..z_{i+1},z_i..) R^_i together with the base-component normalization;
// the left tile carries p. Mirroring the row and conjugating by the
// reflection i -> L+1-i reproduces the same matrix, so the opposite
// assignment is equivalent to relabeling, not a second convention.
constexpr bool kLeftTileCarriesP = true;

struct Port {
  bool top;
  long pos;
};

}  // namespace

Site site(const Cyc& z) { return Site{false, z}; }

Site site_inf() { return Site{true, Cyc()}; }

std::vector<Site> sites_from(const std::vector<Cyc>& z) {
  std::vector<Site> s;
  s.reserve(z.size());
  for (const Cyc& v : z) s.push_back(site(v));
  return s;
}

std::pair<Cyc, Cyc> face_weights(const Site& s, const Cyc& t) {
  const Cyc q = Cyc::q(), qi = Cyc::q_inv();
  if (s.at_infinity) return {Cyc() - qi, Cyc() - q};
  Cyc den = q * t - qi * s.z;
  if (den.is_zero()) throw SingularEvaluation("face weight pole at t = q z");
  return {(q * s.z - qi * t) / den, (s.z - t) / den};
}

RowResult apply_row(const std::vector<bool>& word, const Pattern& p) {
  const int L = p.L;
  if (static_cast<int>(word.size()) != L)
    throw ConfigError("tile word length does not match the pattern size");
  const bool cover = (p.kind == Kind::Punctured);
  const int step_cap = 16 * L + 64;

  auto tile_b = [&](long x) { return word[static_cast<size_t>(base_label(static_cast<int>(x), L) - 1)]; };
  auto wrap = [&](long x) -> long { return cover ? x : base_label(static_cast<int>(x), L); };
  // unique horizontal link of a port; caps/cups join neighbours only
  auto mate = [&](bool top, long x) -> Port {
    if (!top) {
      if (!tile_b(x)) return tile_b(x - 1) ? Port{false, wrap(x - 1)} : Port{true, wrap(x - 1)};
      return tile_b(x + 1) ? Port{true, wrap(x + 1)} : Port{false, wrap(x + 1)};
    }
    if (!tile_b(x)) return tile_b(x + 1) ? Port{true, wrap(x + 1)} : Port{false, wrap(x + 1)};
    return tile_b(x - 1) ? Port{false, wrap(x - 1)} : Port{true, wrap(x - 1)};
  };
  auto bot_partner = [&](long c) -> long {
    if (cover) return cover_partner(p, static_cast<int>(c));
    int v = p.m[static_cast<size_t>(c) - 1];
    if (v == 0) throw TracingInconsistency("strand walked into the defect");
    return v;
  };

  std::vector<char> bot_done(static_cast<size_t>(L) + 1, 0),
      top_done(static_cast<size_t>(L) + 1, 0);
  auto bmark = [&](long c) { bot_done[static_cast<size_t>(base_label(static_cast<int>(c), L))] = 1; };

  RowResult res;
  int defect_out = 0;
  std::vector<int> mout(static_cast<size_t>(L), 0);
  std::vector<int> dout(static_cast<size_t>(L), 0);

  if (p.kind == Kind::Odd) {
    bmark(p.defect);
    Port cur = mate(false, p.defect);
    int steps = 0;
    while (!cur.top) {
      if (++steps > step_cap) throw TracingInconsistency("defect walk did not terminate");
      bmark(cur.pos);
      long nxt = bot_partner(cur.pos);
      bmark(nxt);
      cur = mate(false, nxt);
    }
    defect_out = static_cast<int>(cur.pos);
    top_done[static_cast<size_t>(defect_out)] = 1;
  }

  for (int y = 1; y <= L; ++y) {
    if (top_done[static_cast<size_t>(y)]) continue;
    top_done[static_cast<size_t>(y)] = 1;
    Port cur = mate(true, y);
    int steps = 0;
    while (!cur.top) {
      if (++steps > step_cap) throw TracingInconsistency("strand walk did not terminate");
      bmark(cur.pos);
      long nxt = bot_partner(cur.pos);
      bmark(nxt);
      cur = mate(false, nxt);
    }
    int be = base_label(static_cast<int>(cur.pos), L);
    if (top_done[static_cast<size_t>(be)])
      throw TracingInconsistency("north port reached twice");
    top_done[static_cast<size_t>(be)] = 1;
    if (cover) {
      dout[static_cast<size_t>(y) - 1] = static_cast<int>(cur.pos - y);
      dout[static_cast<size_t>(be) - 1] = static_cast<int>(y - cur.pos);
    } else {
      mout[static_cast<size_t>(y) - 1] = be;
      mout[static_cast<size_t>(be) - 1] = y;
    }
  }

  for (int x = 1; x <= L; ++x) {
    if (bot_done[static_cast<size_t>(x)]) continue;
    bot_done[static_cast<size_t>(x)] = 1;
    long c = bot_partner(x);
    bmark(c);
    int steps = 0;
    for (;;) {
      Port r = mate(false, c);
      if (r.top) throw TracingInconsistency("closed loop escaped to the boundary");
      if (base_label(static_cast<int>(r.pos), L) == x) {
        if (cover && (r.pos - x) != 0)
          res.wrapping++;
        else
          res.contractible++;
        break;
      }
      if (++steps > step_cap) throw TracingInconsistency("loop walk did not terminate");
      bmark(r.pos);
      c = bot_partner(r.pos);
      bmark(c);
    }
  }

  Pattern out;
  out.kind = p.kind;
  out.L = L;
  out.defect = defect_out;
  out.m = cover ? dout : mout;
  validate_pattern(out);
  res.pat = out;
  return res;
}

Matrix<Cyc> build_transfer(const Basis& basis, const std::vector<Site>& sites, const Cyc& t) {
  const int L = basis.L;
  if (static_cast<int>(sites.size()) != L)
    throw ConfigError("site count does not match the basis size");
  std::vector<std::pair<Cyc, Cyc>> tilew;  // (left tile, right tile)
  tilew.reserve(sites.size());
  for (const Site& s : sites) {
    auto [wp, wm] = face_weights(s, t);
    if (kLeftTileCarriesP)
      tilew.emplace_back(wp, wm);
    else
      tilew.emplace_back(wm, wp);
  }
  const size_t n = basis.size();
  Matrix<Cyc> T(n, std::vector<Cyc>(n));
  std::vector<bool> word(static_cast<size_t>(L));
  for (unsigned long mask = 0; mask < (1ul << L); ++mask) {
    Cyc weight = Cyc::one();
    for (int x = 0; x < L; ++x) {
      bool right = (mask >> x) & 1ul;
      word[static_cast<size_t>(x)] = right;
      weight *= right ? tilew[static_cast<size_t>(x)].second : tilew[static_cast<size_t>(x)].first;
    }
    if (weight.is_zero()) continue;
    for (size_t col = 0; col < n; ++col) {
      RowResult r = apply_row(word, basis.pats[col]);
      // closed loops keep weight 1, contractible or wrapping alike
      T[static_cast<size_t>(basis.find(r.pat))][col] += weight;
    }
  }
  return T;
}

}  // namespace looplab
