// SPDX-License-Identifier: MIT
//
// Univariate polynomials and rational functions over the cyclotomic field,
// used for limits in a single spectral parameter.
#pragma once

#include <vector>

#include "looplab/cyc.hpp"
#include "looplab/errors.hpp"

namespace looplab {

// Coefficient vectors, lowest degree first; always trimmed.
using Poly = std::vector<Cyc>;

inline Poly poly_trim(Poly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}
inline bool poly_is_zero(const Poly& p) { return p.empty(); }
inline int poly_deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

inline Poly poly_const(const Cyc& c) {
  return c.is_zero() ? Poly{} : Poly{c};
}
// a + b*X
inline Poly poly_linear(const Cyc& a, const Cyc& b) {
  return poly_trim(Poly{a, b});
}

inline Poly poly_add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Cyc());
  for (size_t k = 0; k < a.size(); ++k) r[k] += a[k];
  for (size_t k = 0; k < b.size(); ++k) r[k] += b[k];
  return poly_trim(std::move(r));
}
inline Poly poly_neg(const Poly& a) {
  Poly r = a;
  for (auto& c : r) c = -c;
  return r;
}
inline Poly poly_sub(const Poly& a, const Poly& b) {
  return poly_add(a, poly_neg(b));
}
inline Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Cyc());
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return poly_trim(std::move(r));
}

// Euclidean division; returns {quotient, remainder}.
inline std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
  if (poly_is_zero(b)) throw DivisionByZero("polynomial division");
  Poly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Cyc());
  Cyc lead_inv = b.back().inv();
  while (a.size() >= b.size()) {
    Cyc c = a.back() * lead_inv;
    size_t shift = a.size() - b.size();
    q[shift] = c;
    for (size_t k = 0; k < b.size(); ++k) a[shift + k] -= c * b[k];
    a = poly_trim(std::move(a));
    if (a.empty()) break;
    if (a.size() > shift + b.size() - 1) throw Error("division did not reduce");
  }
  return {poly_trim(std::move(q)), std::move(a)};
}

inline Poly poly_gcd(Poly a, Poly b) {
  while (!poly_is_zero(b)) {
    Poly r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Cyc inv = a.back().inv();
    for (auto& c : a) c *= inv;
  }
  return a;
}

inline Cyc poly_eval(const Poly& p, const Cyc& x) {
  Cyc r;
  for (size_t k = p.size(); k-- > 0;) r = r * x + p[k];
  return r;
}

// Reduced fraction of univariate polynomials; denominator kept monic.
class RatFunc {
 public:
  RatFunc() : num_{}, den_{Cyc::one()} {}
  explicit RatFunc(long n) : num_(poly_const(Cyc(n))), den_{Cyc::one()} {}
  explicit RatFunc(const Cyc& c) : num_(poly_const(c)), den_{Cyc::one()} {}
  RatFunc(Poly n, Poly d) : num_(poly_trim(std::move(n))), den_(poly_trim(std::move(d))) {
    if (poly_is_zero(den_)) throw DivisionByZero("rational function");
    reduce();
  }
  static RatFunc var() { return RatFunc(Poly{Cyc(), Cyc::one()}, Poly{Cyc::one()}); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return poly_is_zero(num_); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(poly_add(poly_mul(a.num_, b.den_), poly_mul(b.num_, a.den_)),
                   poly_mul(a.den_, b.den_));
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(poly_sub(poly_mul(a.num_, b.den_), poly_mul(b.num_, a.den_)),
                   poly_mul(a.den_, b.den_));
  }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(poly_mul(a.num_, b.num_), poly_mul(a.den_, b.den_));
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw DivisionByZero("rational function division");
    return RatFunc(poly_mul(a.num_, b.den_), poly_mul(a.den_, b.num_));
  }
  RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
  RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  // deg(num) - deg(den); the growth order at infinity. Zero has order
  // INT_MIN-ish; callers must check is_zero first.
  int infinity_order() const {
    if (is_zero()) throw SingularEvaluation("infinity order of zero");
    return poly_deg(num_) - poly_deg(den_);
  }
  // lim x->inf f(x)/x^k, assuming the limit is finite.
  Cyc limit_at_infinity(int k) const {
    if (is_zero()) return Cyc();
    int ord = infinity_order();
    if (ord > k) throw SingularEvaluation("divergent limit at infinity");
    if (ord < k) return Cyc();
    return num_.back() / den_.back();
  }
  Cyc eval(const Cyc& x) const {
    Cyc d = poly_eval(den_, x);
    if (d.is_zero()) throw SingularEvaluation("pole in rational function");
    return poly_eval(num_, x) / d;
  }

 private:
  void reduce() {
    if (poly_is_zero(num_)) {
      den_ = Poly{Cyc::one()};
      return;
    }
    Poly g = poly_gcd(num_, den_);
    if (poly_deg(g) > 0) {
      num_ = poly_divmod(num_, g).first;
      den_ = poly_divmod(den_, g).first;
    }
    Cyc inv = den_.back().inv();
    for (auto& c : num_) c *= inv;
    for (auto& c : den_) c *= inv;
  }
  Poly num_, den_;
};

}  // namespace looplab
