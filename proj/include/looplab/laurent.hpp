// SPDX-License-Identifier: MIT
//
// Laurent polynomials in one indeterminate s over Q(i), used as the generic
// coefficient ring for Temperley-Lieb checks: q = s^2, loop weight
// tau = -s^2 - s^{-2}, omega^{1/2} = i*s. Specializing s -> exp(-i*pi/3)
// (and i -> z^3) lands in the fixed cyclotomic field.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "looplab/cyc.hpp"
#include "looplab/errors.hpp"
#include "looplab/rat.hpp"

namespace looplab {

struct GaussQ {
  Rat re, im;
  GaussQ() : re(0), im(0) {}
  explicit GaussQ(Rat r) : re(std::move(r)), im(0) {}
  GaussQ(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  friend GaussQ operator+(const GaussQ& a, const GaussQ& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussQ operator-(const GaussQ& a, const GaussQ& b) {
    return {a.re - b.re, a.im - b.im};
  }
  GaussQ operator-() const { return {-re, -im}; }
  friend GaussQ operator*(const GaussQ& a, const GaussQ& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussQ operator/(const GaussQ& a, const GaussQ& b) {
    Rat n = b.re * b.re + b.im * b.im;
    if (n == 0) throw DivisionByZero("Gaussian rational division");
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  friend bool operator==(const GaussQ& a, const GaussQ& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussQ& a, const GaussQ& b) { return !(a == b); }

  Cyc to_cyc() const { return Cyc(re) + Cyc(im) * Cyc::i_unit(); }
};

class LaurentG {
 public:
  LaurentG() = default;
  explicit LaurentG(const GaussQ& c) {
    if (!c.is_zero()) t_[0] = c;
  }
  explicit LaurentG(long n) : LaurentG(GaussQ(Rat(n))) {}
  static LaurentG monomial(const GaussQ& c, int power) {
    LaurentG r;
    if (!c.is_zero()) r.t_[power] = c;
    return r;
  }
  static LaurentG zero() { return LaurentG(); }
  static LaurentG one() { return LaurentG(1); }
  static LaurentG s(int power = 1) { return monomial(GaussQ(Rat(1)), power); }
  // q = s^2
  static LaurentG q(int power = 1) { return s(2 * power); }
  // tau = -q - q^{-1}
  static LaurentG tau() {
    return monomial(GaussQ(Rat(-1)), 2) + monomial(GaussQ(Rat(-1)), -2);
  }
  // omega^{1/2} = i*s; consistent with the cyclotomic specialization.
  static LaurentG omega_half() { return monomial(GaussQ(Rat(0), Rat(1)), 1); }

  bool is_zero() const { return t_.empty(); }
  friend LaurentG operator+(const LaurentG& a, const LaurentG& b) {
    LaurentG r = a;
    for (const auto& [p, c] : b.t_) {
      auto it = r.t_.find(p);
      if (it == r.t_.end()) {
        r.t_[p] = c;
      } else {
        it->second = it->second + c;
        if (it->second.is_zero()) r.t_.erase(it);
      }
    }
    return r;
  }
  friend LaurentG operator-(const LaurentG& a, const LaurentG& b) {
    return a + (-b);
  }
  LaurentG operator-() const {
    LaurentG r;
    for (const auto& [p, c] : t_) r.t_[p] = -c;
    return r;
  }
  friend LaurentG operator*(const LaurentG& a, const LaurentG& b) {
    LaurentG r;
    for (const auto& [pa, ca] : a.t_)
      for (const auto& [pb, cb] : b.t_) {
        GaussQ c = ca * cb;
        auto it = r.t_.find(pa + pb);
        if (it == r.t_.end()) {
          if (!c.is_zero()) r.t_[pa + pb] = c;
        } else {
          it->second = it->second + c;
          if (it->second.is_zero()) r.t_.erase(it);
        }
      }
    return r;
  }
  LaurentG& operator+=(const LaurentG& b) { return *this = *this + b; }
  LaurentG& operator*=(const LaurentG& b) { return *this = *this * b; }
  friend bool operator==(const LaurentG& a, const LaurentG& b) {
    return a.t_ == b.t_;
  }
  friend bool operator!=(const LaurentG& a, const LaurentG& b) {
    return !(a == b);
  }

  // Exact division; throws if the divisor does not divide exactly.
  LaurentG divide_exact(const LaurentG& d) const {
    if (d.is_zero()) throw DivisionByZero("Laurent division by zero");
    if (is_zero()) return LaurentG();
    // Shift both to ordinary polynomials and long-divide.
    int lo_n = t_.begin()->first, lo_d = d.t_.begin()->first;
    std::vector<GaussQ> num = coeff_vec(*this), den = coeff_vec(d);
    std::vector<GaussQ> quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0);
    for (int k = static_cast<int>(num.size()) - static_cast<int>(den.size());
         k >= 0; --k) {
      GaussQ c = num[static_cast<size_t>(k) + den.size() - 1] / den.back();
      quot[static_cast<size_t>(k)] = c;
      if (!c.is_zero())
        for (size_t j = 0; j < den.size(); ++j) {
          num[static_cast<size_t>(k) + j] =
              num[static_cast<size_t>(k) + j] - c * den[j];
        }
    }
    for (const auto& c : num)
      if (!c.is_zero()) throw Error("inexact Laurent division");
    LaurentG r;
    for (size_t k = 0; k < quot.size(); ++k)
      if (!quot[k].is_zero())
        r.t_[static_cast<int>(k) + lo_n - lo_d] = quot[k];
    return r;
  }

  // Ring map s -> s_val, i -> z^3.
  Cyc specialize(const Cyc& s_val) const {
    Cyc out;
    for (const auto& [p, c] : t_) out += c.to_cyc() * s_val.pow(p);
    return out;
  }

  std::string str() const {
    if (t_.empty()) return "0";
    std::string out;
    for (const auto& [p, c] : t_) {
      if (!out.empty()) out += " + ";
      out += "(" + rat_to_string(c.re) + "," + rat_to_string(c.im) + ")s^" +
             std::to_string(p);
    }
    return out;
  }

 private:
  static std::vector<GaussQ> coeff_vec(const LaurentG& x) {
    int lo = x.t_.begin()->first, hi = x.t_.rbegin()->first;
    std::vector<GaussQ> v(static_cast<size_t>(hi - lo + 1));
    for (const auto& [p, c] : x.t_) v[static_cast<size_t>(p - lo)] = c;
    return v;
  }
  std::map<int, GaussQ> t_;
};

inline LaurentG laurent_i_times_s(int power) {
  // (i*s)^power
  int rem = ((power % 4) + 4) % 4;
  GaussQ ipow = rem == 0   ? GaussQ(Rat(1))
                : rem == 1 ? GaussQ(Rat(0), Rat(1))
                : rem == 2 ? GaussQ(Rat(-1))
                           : GaussQ(Rat(0), Rat(-1));
  return LaurentG::monomial(ipow, power);
}

}  // namespace looplab
