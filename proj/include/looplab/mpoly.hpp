// SPDX-License-Identifier: MIT
//
// Sparse multivariate polynomials over the cyclotomic field, with the
// adjacent-transposition action and divided differences used by the
// functional equations.
#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "looplab/cyc.hpp"
#include "looplab/errors.hpp"

namespace looplab {

class MPoly {
 public:
  explicit MPoly(int nvars = 0) : nv_(nvars) {}

  static MPoly constant(int nvars, const Cyc& c) {
    MPoly p(nvars);
    if (!c.is_zero()) p.t_[std::vector<int>(static_cast<size_t>(nvars), 0)] = c;
    return p;
  }
  // 1-based variable index.
  static MPoly var(int nvars, int i) {
    MPoly p(nvars);
    std::vector<int> e(static_cast<size_t>(nvars), 0);
    e[static_cast<size_t>(i - 1)] = 1;
    p.t_[e] = Cyc::one();
    return p;
  }

  int nvars() const { return nv_; }
  bool is_zero() const { return t_.empty(); }
  size_t term_count() const { return t_.size(); }
  const std::map<std::vector<int>, Cyc>& terms() const { return t_; }

  friend MPoly operator+(const MPoly& a, const MPoly& b) {
    a.check_vars(b);
    MPoly r = a;
    for (const auto& [e, c] : b.t_) r.add_term(e, c);
    return r;
  }
  friend MPoly operator-(const MPoly& a, const MPoly& b) {
    a.check_vars(b);
    MPoly r = a;
    for (const auto& [e, c] : b.t_) r.add_term(e, -c);
    return r;
  }
  MPoly operator-() const {
    MPoly r(nv_);
    for (const auto& [e, c] : t_) r.t_[e] = -c;
    return r;
  }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    a.check_vars(b);
    MPoly r(a.nv_);
    std::vector<int> e(static_cast<size_t>(a.nv_));
    for (const auto& [ea, ca] : a.t_)
      for (const auto& [eb, cb] : b.t_) {
        for (size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  friend MPoly operator*(const Cyc& c, const MPoly& a) {
    MPoly r(a.nv_);
    if (c.is_zero()) return r;
    for (const auto& [e, co] : a.t_) r.t_[e] = c * co;
    return r;
  }
  MPoly& operator+=(const MPoly& b) { return *this = *this + b; }
  MPoly& operator-=(const MPoly& b) { return *this = *this - b; }
  MPoly& operator*=(const MPoly& b) { return *this = *this * b; }
  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.nv_ == b.nv_ && a.t_ == b.t_;
  }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  Cyc eval(const std::vector<Cyc>& z) const {
    if (static_cast<int>(z.size()) != nv_)
      throw ConfigError("eval arity mismatch");
    Cyc out;
    for (const auto& [e, c] : t_) {
      Cyc term = c;
      for (size_t k = 0; k < e.size(); ++k)
        if (e[k] != 0) term *= z[k].pow(e[k]);
      out += term;
    }
    return out;
  }

  // Swap variables i and i+1 (1-based).
  MPoly tau_swap(int i) const {
    if (i < 1 || i + 1 > nv_) throw ConfigError("tau_swap index out of range");
    size_t a = static_cast<size_t>(i - 1), b = a + 1;
    MPoly r(nv_);
    for (const auto& [e, c] : t_) {
      std::vector<int> f = e;
      std::swap(f[a], f[b]);
      r.add_term(f, c);
    }
    return r;
  }

  // Divided difference (tau_i f - f) / (z_{i+1} - z_i); annihilates
  // polynomials symmetric in (z_i, z_{i+1}).
  MPoly divided_difference(int i) const {
    MPoly g = tau_swap(i) - *this;
    size_t xi = static_cast<size_t>(i - 1), xj = xi + 1;
    // Collect g as a polynomial in z_{i+1} with MPoly coefficients.
    int deg = 0;
    for (const auto& [e, c] : g.t_) deg = std::max(deg, e[xj]);
    std::vector<MPoly> coef(static_cast<size_t>(deg + 1), MPoly(nv_));
    for (const auto& [e, c] : g.t_) {
      std::vector<int> f = e;
      int k = f[xj];
      f[xj] = 0;
      coef[static_cast<size_t>(k)].add_term(f, c);
    }
    // Synthetic division by (z_{i+1} - z_i).
    MPoly zi = var(nv_, static_cast<int>(xi) + 1);
    std::vector<MPoly> quot(static_cast<size_t>(std::max(deg, 1)), MPoly(nv_));
    MPoly carry(nv_);
    for (int k = deg; k >= 1; --k) {
      MPoly qk = coef[static_cast<size_t>(k)] + carry;
      quot[static_cast<size_t>(k - 1)] = qk;
      carry = zi * qk;
    }
    if (!(coef[0] + carry).is_zero())
      throw Error("divided difference: inexact division");
    MPoly r(nv_);
    for (size_t k = 0; k < quot.size(); ++k)
      for (const auto& [e, c] : quot[k].t_) {
        std::vector<int> f = e;
        f[xj] += static_cast<int>(k);
        r.add_term(f, c);
      }
    return r;
  }

  // Substitute z_i = value (1-based); the variable slot remains, exponent 0.
  MPoly eval_at(int i, const Cyc& value) const {
    size_t xi = static_cast<size_t>(i - 1);
    MPoly r(nv_);
    for (const auto& [e, c] : t_) {
      std::vector<int> f = e;
      int k = f[xi];
      f[xi] = 0;
      r.add_term(f, c * value.pow(k));
    }
    return r;
  }

  int degree_in(int i) const {
    int d = 0;
    for (const auto& [e, c] : t_) d = std::max(d, e[static_cast<size_t>(i - 1)]);
    return d;
  }

  std::string str() const {
    if (t_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : t_) {
      if (!out.empty()) out += " + ";
      out += "(" + c.str() + ")";
      for (size_t k = 0; k < e.size(); ++k)
        if (e[k] != 0)
          out += "*z" + std::to_string(k + 1) +
                 (e[k] == 1 ? "" : "^" + std::to_string(e[k]));
    }
    return out;
  }

  void add_term(const std::vector<int>& e, const Cyc& c) {
    if (c.is_zero()) return;
    auto it = t_.find(e);
    if (it == t_.end()) {
      t_[e] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

 private:
  void check_vars(const MPoly& b) const {
    if (nv_ != b.nv_) throw ConfigError("mixed variable counts");
  }
  int nv_;
  std::map<std::vector<int>, Cyc> t_;
};

// Newton interpolation of a univariate function sampled at distinct nodes;
// returns the value of the unique degree < nodes.size() interpolant at x.
inline Cyc newton_eval(const std::vector<Cyc>& nodes,
                       const std::vector<Cyc>& values, const Cyc& x) {
  if (nodes.size() != values.size() || nodes.empty())
    throw ConfigError("newton_eval needs equally many nodes and values");
  std::vector<Cyc> d = values;
  size_t n = nodes.size();
  for (size_t j = 1; j < n; ++j)
    for (size_t k = n - 1; k >= j; --k) {
      Cyc den = nodes[k] - nodes[k - j];
      if (den.is_zero()) throw SingularEvaluation("repeated interpolation node");
      d[k] = (d[k] - d[k - 1]) / den;
      if (k == j) break;
    }
  Cyc out = d[n - 1];
  for (size_t k = n - 1; k-- > 0;) out = out * (x - nodes[k]) + d[k];
  return out;
}

// Tensor-grid Newton interpolation: nodes[v] lists the sample points of
// variable v+1, value(idx) returns the sample with node index idx[v] for
// every variable. Exact for polynomials of degree <= nodes[v].size()-1 in
// each variable.
inline MPoly interpolate_grid(
    int nvars, const std::vector<std::vector<Rat>>& nodes,
    const std::function<Cyc(const std::vector<size_t>&)>& value) {
  if (static_cast<int>(nodes.size()) != nvars)
    throw ConfigError("interpolate_grid arity mismatch");
  std::vector<size_t> idx(static_cast<size_t>(nvars), 0);
  // Recursively interpolate in variable v+1..nvars with idx[0..v-1] fixed.
  std::function<MPoly(int)> rec = [&](int v) -> MPoly {
    if (v == nvars) {
      std::vector<size_t> full = idx;
      return MPoly::constant(nvars, value(full));
    }
    const std::vector<Rat>& xs = nodes[static_cast<size_t>(v)];
    if (xs.empty()) throw ConfigError("empty node list");
    std::vector<MPoly> d;
    d.reserve(xs.size());
    for (size_t j = 0; j < xs.size(); ++j) {
      idx[static_cast<size_t>(v)] = j;
      d.push_back(rec(v + 1));
    }
    size_t n = xs.size();
    for (size_t j = 1; j < n; ++j)
      for (size_t k = n - 1; k >= j; --k) {
        Rat den = xs[k] - xs[k - j];
        if (den == 0) throw SingularEvaluation("repeated grid node");
        d[k] = Cyc(Rat(1) / den) * (d[k] - d[k - 1]);
        if (k == j) break;
      }
    MPoly x = MPoly::var(nvars, v + 1);
    MPoly out = d[n - 1];
    for (size_t k = n - 1; k-- > 0;)
      out = out * (x - MPoly::constant(nvars, Cyc(xs[k]))) + d[k];
    idx[static_cast<size_t>(v)] = 0;
    return out;
  };
  return rec(0);
}

}  // namespace looplab
