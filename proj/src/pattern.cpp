// SPDX-License-Identifier: MIT
#include "looplab/pattern.hpp"

#include <algorithm>
#include <functional>

#include "looplab/rat.hpp"

namespace looplab {

std::string kind_to_string(Kind k) {
  switch (k) {
    case Kind::Odd:
      return "odd";
    case Kind::EvenIC:
      return "evenic";
    case Kind::Punctured:
      return "punctured";
  }
  throw ConfigError("bad kind");
}

Kind kind_from_string(const std::string& s) {
  if (s == "odd") return Kind::Odd;
  if (s == "evenic") return Kind::EvenIC;
  if (s == "punctured") return Kind::Punctured;
  throw ConfigError("unknown kind: " + s);
}

int base_label(int c, int L) { return ((c - 1) % L + L) % L + 1; }

namespace {

// Arcs as cover intervals [lo, hi]; crossing means interleaved endpoints of
// some pair of lifts.
bool intervals_cross(long a, long b, long c, long d, int L) {
  for (int k = -2; k <= 2; ++k) {
    long cc = c + static_cast<long>(k) * L, dd = d + static_cast<long>(k) * L;
    if ((a < cc && cc < b && b < dd) || (cc < a && a < dd && dd < b))
      return true;
  }
  return false;
}

// Noncrossing check for a linear sequence of matched positions (-1 =
// unmatched slot already removed).
bool linear_noncrossing(const std::vector<int>& partner_pos) {
  size_t n = partner_pos.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      long a = static_cast<long>(i), b = partner_pos[i];
      long c = static_cast<long>(j), d = partner_pos[j];
      if (b < 0 || d < 0) continue;
      if (a < c && c < b && b < d) return false;
    }
  return true;
}

// Positions 0..L-1 in the linearization cut just after `cut` (label in 1..L);
// the cut label itself is excluded for Odd patterns.
std::vector<int> cut_positions(const Pattern& p) {
  std::vector<int> pos(static_cast<size_t>(p.L) + 1, -1);
  int at = 0;
  for (int k = 1; k < p.L; ++k) {
    int label = base_label(p.defect + k, p.L);
    pos[static_cast<size_t>(label)] = at++;
  }
  return pos;
}

void validate_matching(const Pattern& p) {
  if (static_cast<int>(p.m.size()) != p.L)
    throw ConfigError("matching length disagrees with size");
  for (int i = 1; i <= p.L; ++i) {
    int j = p.m[static_cast<size_t>(i - 1)];
    if (p.kind == Kind::Odd && i == p.defect) {
      if (j != 0) throw ConfigError("defect label must be unmatched");
      continue;
    }
    if (j < 1 || j > p.L || j == i)
      throw ConfigError("matching entry out of range");
    if (p.m[static_cast<size_t>(j - 1)] != i)
      throw ConfigError("matching is not an involution");
  }
}

}  // namespace

void validate_pattern(const Pattern& p) {
  switch (p.kind) {
    case Kind::Odd: {
      if (p.L < 1 || p.L % 2 == 0)
        throw SizeParityMismatch("odd kind needs odd size");
      if (p.defect < 1 || p.defect > p.L)
        throw ConfigError("defect out of range");
      validate_matching(p);
      std::vector<int> pos = cut_positions(p);
      std::vector<int> pp(static_cast<size_t>(p.L) - 1, -1);
      for (int i = 1; i <= p.L; ++i) {
        if (i == p.defect) continue;
        pp[static_cast<size_t>(pos[static_cast<size_t>(i)])] =
            pos[static_cast<size_t>(p.m[static_cast<size_t>(i - 1)])];
      }
      if (!linear_noncrossing(pp)) throw ConfigError("crossing arches");
      break;
    }
    case Kind::EvenIC: {
      if (p.L < 2 || p.L % 2 == 1)
        throw SizeParityMismatch("evenic kind needs even size");
      if (p.defect != 0) throw ConfigError("evenic pattern has no defect");
      validate_matching(p);
      std::vector<int> pp(static_cast<size_t>(p.L));
      for (int i = 1; i <= p.L; ++i)
        pp[static_cast<size_t>(i - 1)] = p.m[static_cast<size_t>(i - 1)] - 1;
      if (!linear_noncrossing(pp)) throw ConfigError("crossing arches");
      break;
    }
    case Kind::Punctured: {
      if (p.L < 2 || p.L % 2 == 1)
        throw SizeParityMismatch("punctured kind needs even size");
      if (p.defect != 0) throw ConfigError("punctured pattern has no defect");
      if (static_cast<int>(p.m.size()) != p.L)
        throw ConfigError("offset list length disagrees with size");
      for (int i = 1; i <= p.L; ++i) {
        int d = p.m[static_cast<size_t>(i - 1)];
        if (d % 2 == 0) throw ConfigError("offsets must be odd");
        if (d < -(p.L - 1) || d > p.L - 1)
          throw OffsetOverflow("offset " + std::to_string(d) + " at point " +
                               std::to_string(i));
        int j = i + d;
        if (cover_partner(p, j) != i)
          throw ConfigError("offsets are not an involution on the cover");
      }
      // pairwise noncrossing on the cover
      for (int i = 1; i <= p.L; ++i) {
        if (p.m[static_cast<size_t>(i - 1)] < 0) continue;
        long a = i, b = i + p.m[static_cast<size_t>(i - 1)];
        for (int j = i + 1; j <= p.L; ++j) {
          if (p.m[static_cast<size_t>(j - 1)] < 0) continue;
          long c = j, d = j + p.m[static_cast<size_t>(j - 1)];
          if (intervals_cross(a, b, c, d, p.L))
            throw ConfigError("crossing arches on the cover");
        }
      }
      break;
    }
  }
}

int cover_partner(const Pattern& p, int c) {
  if (p.kind != Kind::Punctured)
    throw ConfigError("cover_partner needs a punctured pattern");
  int b = base_label(c, p.L);
  return c + p.m[static_cast<size_t>(b - 1)];
}

std::string serialize_pattern(const Pattern& p) {
  std::string s = kind_to_string(p.kind) + ":" + std::to_string(p.L) + ":";
  if (p.kind == Kind::Punctured) {
    for (int i = 0; i < p.L; ++i) {
      if (i) s += ",";
      s += std::to_string(p.m[static_cast<size_t>(i)]);
    }
    return s;
  }
  if (p.kind == Kind::Odd) s += std::to_string(p.defect) + ":";
  std::vector<std::pair<int, int>> arcs;
  for (int i = 1; i <= p.L; ++i) {
    int j = p.m[static_cast<size_t>(i - 1)];
    if (j > i) arcs.emplace_back(i, j);
  }
  for (size_t k = 0; k < arcs.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(arcs[k].first) + "-" + std::to_string(arcs[k].second);
  }
  return s;
}

int Basis::find(const Pattern& p) const {
  auto it = index.find(serialize_pattern(p));
  if (it == index.end())
    throw TracingInconsistency("pattern not in basis: " + serialize_pattern(p));
  return it->second;
}

namespace {

// Noncrossing perfect matchings of the labels in `seq` (linear order);
// emits partner maps into `out` via the callback.
void noncrossing_matchings(const std::vector<int>& seq, std::vector<int>& m,
                           const std::function<void()>& emit) {
  if (seq.empty()) {
    emit();
    return;
  }
  int first = seq[0];
  for (size_t k = 1; k < seq.size(); k += 2) {
    int mate = seq[k];
    m[static_cast<size_t>(first - 1)] = mate;
    m[static_cast<size_t>(mate - 1)] = first;
    std::vector<int> inside(seq.begin() + 1, seq.begin() + static_cast<long>(k));
    std::vector<int> outside(seq.begin() + static_cast<long>(k) + 1, seq.end());
    noncrossing_matchings(inside, m, [&]() {
      noncrossing_matchings(outside, m, emit);
    });
  }
}

void enumerate_punctured(int L, std::vector<Pattern>& out) {
  std::vector<int> d(static_cast<size_t>(L), 0);
  std::vector<std::pair<long, long>> fixed;  // chosen arc intervals
  std::function<void()> rec = [&]() {
    int i = 0;
    while (i < L && d[static_cast<size_t>(i)] != 0) ++i;
    if (i == L) {
      Pattern p{Kind::Punctured, L, 0, d};
      out.push_back(p);
      return;
    }
    int base = i + 1;
    for (int mag = 1; mag <= L - 1; mag += 2) {
      for (int sgn : {+1, -1}) {
        int off = sgn * mag;
        int j = base + off;
        int jb = base_label(j, L);
        if (jb == base) continue;
        if (d[static_cast<size_t>(jb - 1)] != 0) continue;
        long a = std::min(base, j), b = std::max(base, j);
        bool ok = true;
        for (const auto& [c, dd] : fixed)
          if (intervals_cross(a, b, c, dd, L)) {
            ok = false;
            break;
          }
        if (!ok) continue;
        d[static_cast<size_t>(base - 1)] = off;
        d[static_cast<size_t>(jb - 1)] = base - j;
        fixed.emplace_back(a, b);
        rec();
        fixed.pop_back();
        d[static_cast<size_t>(base - 1)] = 0;
        d[static_cast<size_t>(jb - 1)] = 0;
      }
    }
  };
  rec();
}

}  // namespace

Basis make_basis(Kind kind, int L) {
  Basis basis{kind, L, {}, {}};
  std::vector<Pattern>& out = basis.pats;
  switch (kind) {
    case Kind::Odd: {
      if (L < 1 || L % 2 == 0)
        throw SizeParityMismatch("odd kind needs odd size");
      for (int def = 1; def <= L; ++def) {
        std::vector<int> seq;
        for (int k = 1; k < L; ++k) seq.push_back(base_label(def + k, L));
        std::vector<int> m(static_cast<size_t>(L), 0);
        noncrossing_matchings(seq, m, [&]() {
          out.push_back(Pattern{Kind::Odd, L, def, m});
        });
      }
      break;
    }
    case Kind::EvenIC: {
      if (L < 2 || L % 2 == 1)
        throw SizeParityMismatch("evenic kind needs even size");
      std::vector<int> seq;
      for (int k = 1; k <= L; ++k) seq.push_back(k);
      std::vector<int> m(static_cast<size_t>(L), 0);
      noncrossing_matchings(seq, m, [&]() {
        out.push_back(Pattern{Kind::EvenIC, L, 0, m});
      });
      break;
    }
    case Kind::Punctured: {
      if (L < 2 || L % 2 == 1)
        throw SizeParityMismatch("punctured kind needs even size");
      enumerate_punctured(L, out);
      break;
    }
  }
  std::sort(out.begin(), out.end(), [](const Pattern& a, const Pattern& b) {
    return serialize_pattern(a) < serialize_pattern(b);
  });
  Int expected =
      kind == Kind::Odd       ? binomial(static_cast<unsigned>(L), static_cast<unsigned>((L - 1) / 2))
      : kind == Kind::EvenIC  ? binomial(static_cast<unsigned>(L), static_cast<unsigned>(L / 2)) /
                                   (L / 2 + 1)
                              : binomial(static_cast<unsigned>(L), static_cast<unsigned>(L / 2));
  if (Int(static_cast<long>(out.size())) != expected)
    throw TracingInconsistency("basis count mismatch for " +
                               kind_to_string(kind) + " size " +
                               std::to_string(L));
  for (size_t k = 0; k < out.size(); ++k) {
    validate_pattern(out[k]);
    basis.index[serialize_pattern(out[k])] = static_cast<int>(k);
  }
  return basis;
}

Pattern rotate(const Pattern& p) {
  Pattern r = p;
  if (p.kind == Kind::Punctured) {
    for (int i = 1; i <= p.L; ++i)
      r.m[static_cast<size_t>(base_label(i + 1, p.L) - 1)] =
          p.m[static_cast<size_t>(i - 1)];
    return r;
  }
  for (int i = 1; i <= p.L; ++i) {
    int j = p.m[static_cast<size_t>(i - 1)];
    r.m[static_cast<size_t>(base_label(i + 1, p.L) - 1)] =
        j == 0 ? 0 : base_label(j + 1, p.L);
  }
  if (p.kind == Kind::Odd) r.defect = base_label(p.defect + 1, p.L);
  return r;
}

Pattern rotate_inv(const Pattern& p) {
  Pattern r = p;
  for (int k = 1; k < p.L; ++k) r = rotate(r);
  return r;
}

Pattern reflect(const Pattern& p) {
  Pattern r = p;
  if (p.kind == Kind::Punctured) {
    // cover arc (i, i+d) maps to (L+1-i-d, L+1-i), keeping the offset d
    for (int i = 1; i <= p.L; ++i) {
      int d = p.m[static_cast<size_t>(i) - 1];
      r.m[static_cast<size_t>(base_label(p.L + 1 - i - d, p.L)) - 1] = d;
    }
    return r;
  }
  for (int i = 1; i <= p.L; ++i) {
    int j = p.m[static_cast<size_t>(i) - 1];
    r.m[static_cast<size_t>(p.L - i)] = (j == 0) ? 0 : p.L + 1 - j;
  }
  if (p.kind == Kind::Odd) r.defect = p.L + 1 - p.defect;
  return r;
}

EResult apply_e(int i, const Pattern& p) {
  if (i < 1 || i > p.L) throw ConfigError("generator index out of range");
  EResult res;
  res.pat = p;
  int j = base_label(i + 1, p.L);
  if (p.kind == Kind::Punctured) {
    int di = p.m[static_cast<size_t>(i - 1)];
    if (di == 1) {  // little arch: closes a contractible loop
      res.contractible = 1;
      return res;
    }
    if (di == 1 - p.L) {  // arch around the back: closes a wrapping loop
      res.wrapping = 1;
      res.pat.m[static_cast<size_t>(i - 1)] = 1;
      res.pat.m[static_cast<size_t>(j - 1)] = -1;
      validate_pattern(res.pat);
      return res;
    }
    long a = i + di;                                     // partner of i
    long b = (i + 1) + p.m[static_cast<size_t>(j - 1)];  // partner of i+1
    res.pat.m[static_cast<size_t>(i - 1)] = 1;
    res.pat.m[static_cast<size_t>(j - 1)] = -1;
    res.pat.m[static_cast<size_t>(base_label(static_cast<int>(a), p.L) - 1)] =
        static_cast<int>(b - a);
    res.pat.m[static_cast<size_t>(base_label(static_cast<int>(b), p.L) - 1)] =
        static_cast<int>(a - b);
    validate_pattern(res.pat);
    return res;
  }
  // Odd / EvenIC
  if (p.m[static_cast<size_t>(i - 1)] == j) {
    res.contractible = 1;
    return res;
  }
  if (p.kind == Kind::Odd && p.defect == i) {
    int b = p.m[static_cast<size_t>(j - 1)];
    res.pat.m[static_cast<size_t>(i - 1)] = j;
    res.pat.m[static_cast<size_t>(j - 1)] = i;
    res.pat.m[static_cast<size_t>(b - 1)] = 0;
    res.pat.defect = b;
    validate_pattern(res.pat);
    return res;
  }
  if (p.kind == Kind::Odd && p.defect == j) {
    int a = p.m[static_cast<size_t>(i - 1)];
    res.pat.m[static_cast<size_t>(i - 1)] = j;
    res.pat.m[static_cast<size_t>(j - 1)] = i;
    res.pat.m[static_cast<size_t>(a - 1)] = 0;
    res.pat.defect = a;
    validate_pattern(res.pat);
    return res;
  }
  int a = p.m[static_cast<size_t>(i - 1)];
  int b = p.m[static_cast<size_t>(j - 1)];
  res.pat.m[static_cast<size_t>(i - 1)] = j;
  res.pat.m[static_cast<size_t>(j - 1)] = i;
  res.pat.m[static_cast<size_t>(a - 1)] = b;
  res.pat.m[static_cast<size_t>(b - 1)] = a;
  validate_pattern(res.pat);
  return res;
}

Pattern insert_little_arch(int i, const Pattern& p) {
  int L2 = p.L + 2;
  if (i < 1 || i > p.L + 1)
    throw ConfigError("little arch position out of range");
  Pattern r;
  r.kind = p.kind;
  r.L = L2;
  r.m.assign(static_cast<size_t>(L2), 0);
  auto shift = [&](int x) { return x < i ? x : x + 2; };
  if (p.kind == Kind::Punctured) {
    for (int a = 1; a <= p.L; ++a) {
      int cov = a + p.m[static_cast<size_t>(a - 1)];
      int b = base_label(cov, p.L);
      int k = (cov - b) / p.L;  // winding of the chosen lift
      r.m[static_cast<size_t>(shift(a) - 1)] = shift(b) + L2 * k - shift(a);
    }
    r.m[static_cast<size_t>(i - 1)] = 1;
    r.m[static_cast<size_t>(i)] = -1;
  } else {
    for (int a = 1; a <= p.L; ++a) {
      int b = p.m[static_cast<size_t>(a - 1)];
      if (b != 0) r.m[static_cast<size_t>(shift(a) - 1)] = shift(b);
    }
    r.m[static_cast<size_t>(i - 1)] = i + 1;
    r.m[static_cast<size_t>(i)] = i;
    if (p.kind == Kind::Odd) r.defect = shift(p.defect);
  }
  validate_pattern(r);
  return r;
}

int paste_loops(const Pattern& a, const Pattern& b) {
  if (a.kind != b.kind || a.L != b.L)
    throw ConfigError("paste_loops needs patterns of one shape");
  auto mate = [&](const Pattern& p, int x) {
    if (p.kind == Kind::Punctured)
      return base_label(x + p.m[static_cast<size_t>(x - 1)], p.L);
    return p.m[static_cast<size_t>(x - 1)];
  };
  std::vector<bool> seen(static_cast<size_t>(a.L) + 1, false);
  // The defect path (Odd) is open: walk it first without counting.
  if (a.kind == Kind::Odd) {
    int x = a.defect;
    bool use_b = true;
    while (true) {
      seen[static_cast<size_t>(x)] = true;
      int nx = use_b ? mate(b, x) : mate(a, x);
      if (nx == 0) {
        seen[static_cast<size_t>(x)] = true;
        break;
      }
      x = nx;
      use_b = !use_b;
    }
  }
  int loops = 0;
  for (int s = 1; s <= a.L; ++s) {
    if (seen[static_cast<size_t>(s)]) continue;
    int x = s;
    bool use_a = true;
    do {
      seen[static_cast<size_t>(x)] = true;
      x = use_a ? mate(a, x) : mate(b, x);
      use_a = !use_a;
    } while (x != s || !use_a);
    ++loops;
  }
  return loops;
}

void PatLin::add(const Pattern& p, const Cyc& c) {
  if (c.is_zero()) return;
  std::string key = serialize_pattern(p);
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms[key] = {p, c};
  } else {
    it->second.second += c;
    if (it->second.second.is_zero()) terms.erase(it);
  }
}

Cyc PatLin::coeff_sum() const {
  Cyc s;
  for (const auto& [k, pc] : terms) s += pc.second;
  return s;
}

namespace {

// Crossing sense convention, fixed once by the transfer-matrix intertwining
// relations (see the projection tests): in the downward variant the smoothing
// that reconnects the new strand to the far (east) endpoint carries q^{-1/2}.
constexpr bool kDownBetaGetsQHalf = false;

struct Branch {
  std::vector<std::pair<int, int>> arcs;
  int v;
  Cyc coef;
};

}  // namespace

PatLin project_up(const Pattern& p, bool to_infinity) {
  validate_pattern(p);
  Cyc cb = Cyc::q_half(), ca = Cyc::q_half_inv();
  if (kDownBetaGetsQHalf == to_infinity) std::swap(ca, cb);
  PatLin out;
  int pnew = p.L + 1;

  if (p.kind == Kind::Odd) {
    // Linearize by cutting at the defect; position of the new point included.
    std::vector<int> pos(static_cast<size_t>(p.L) + 2, -1);
    int at = 0;
    for (int k = 1; k <= p.L; ++k) {
      int lab = base_label(p.defect + k, p.L);
      if (lab == 1) pos[static_cast<size_t>(pnew)] = at++;  // L+1 sits before 1
      if (lab == p.defect) break;
      pos[static_cast<size_t>(lab)] = at++;
    }
    if (pos[static_cast<size_t>(pnew)] < 0) pos[static_cast<size_t>(pnew)] = at++;
    int pv = pos[static_cast<size_t>(pnew)];
    std::vector<std::pair<int, int>> covering, rest;  // label pairs
    for (int x = 1; x <= p.L; ++x) {
      int y = p.m[static_cast<size_t>(x - 1)];
      if (y <= x) continue;
      int px = pos[static_cast<size_t>(x)], py = pos[static_cast<size_t>(y)];
      int w = px < py ? x : y, e = px < py ? y : x;
      if (pos[static_cast<size_t>(w)] < pv && pv < pos[static_cast<size_t>(e)])
        covering.emplace_back(w, e);
      else
        rest.emplace_back(x, y);
    }
    std::sort(covering.begin(), covering.end(),
              [&](const std::pair<int, int>& A, const std::pair<int, int>& B) {
                return pos[static_cast<size_t>(A.first)] >
                       pos[static_cast<size_t>(B.first)];
              });
    std::vector<Branch> branches{{rest, pnew, Cyc::one()}};
    for (const auto& [w, e] : covering) {
      std::vector<Branch> next;
      for (const Branch& br : branches) {
        Branch alpha = br;
        alpha.arcs.emplace_back(br.v, w);
        alpha.v = e;
        alpha.coef = br.coef * ca;
        Branch beta = br;
        beta.arcs.emplace_back(br.v, e);
        beta.v = w;
        beta.coef = br.coef * cb;
        next.push_back(std::move(alpha));
        next.push_back(std::move(beta));
      }
      branches = std::move(next);
    }
    for (const Branch& br : branches) {
      Pattern q{Kind::EvenIC, p.L + 1, 0,
                std::vector<int>(static_cast<size_t>(p.L) + 1, 0)};
      for (const auto& [x, y] : br.arcs) {
        q.m[static_cast<size_t>(x - 1)] = y;
        q.m[static_cast<size_t>(y - 1)] = x;
      }
      q.m[static_cast<size_t>(br.v - 1)] = p.defect;
      q.m[static_cast<size_t>(p.defect - 1)] = br.v;
      validate_pattern(q);
      out.add(q, br.coef);
    }
    return out;
  }

  if (p.kind == Kind::Punctured) {
    // The new strand runs from the gap between L and 1 straight to the
    // puncture; it crosses the arcs whose cover lift straddles that gap.
    std::vector<std::pair<int, int>> covering;  // cover intervals [a, b]
    std::vector<std::pair<int, int>> rest;      // base label pairs
    for (int x = 1; x <= p.L; ++x) {
      int d = p.m[static_cast<size_t>(x - 1)];
      if (d < 0) continue;
      if (x + d >= p.L + 1)
        covering.emplace_back(x - p.L, x + d - p.L);
      else
        rest.emplace_back(x, base_label(x + d, p.L));
    }
    std::sort(covering.begin(), covering.end(),
              [](const std::pair<int, int>& A, const std::pair<int, int>& B) {
                return A.first > B.first;
              });
    std::vector<Branch> branches{{rest, pnew, Cyc::one()}};
    for (const auto& [a, b] : covering) {
      int wa = base_label(a, p.L), eb = base_label(b, p.L);
      std::vector<Branch> next;
      for (const Branch& br : branches) {
        Branch alpha = br;
        alpha.arcs.emplace_back(br.v, wa);
        alpha.v = eb;
        alpha.coef = br.coef * ca;
        Branch beta = br;
        beta.arcs.emplace_back(br.v, eb);
        beta.v = wa;
        beta.coef = br.coef * cb;
        next.push_back(std::move(alpha));
        next.push_back(std::move(beta));
      }
      branches = std::move(next);
    }
    for (const Branch& br : branches) {
      Pattern q{Kind::Odd, p.L + 1, br.v,
                std::vector<int>(static_cast<size_t>(p.L) + 1, 0)};
      for (const auto& [x, y] : br.arcs) {
        q.m[static_cast<size_t>(x - 1)] = y;
        q.m[static_cast<size_t>(y - 1)] = x;
      }
      validate_pattern(q);
      out.add(q, br.coef);
    }
    return out;
  }

  throw ConfigError("project_up maps odd or punctured patterns");
}

}  // namespace looplab
