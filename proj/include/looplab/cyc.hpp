// SPDX-License-Identifier: MIT
//
// Exact arithmetic in Q(z) where z is a primitive 12th root of unity,
// represented on the basis {1, z, z^2, z^3} with z^4 = z^2 - 1 (so z^6 = -1).
// In the fixed embedding z = exp(i*pi/6); all named constants below refer to
// that embedding.
#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "looplab/errors.hpp"
#include "looplab/rat.hpp"

namespace looplab {

class Cyc {
 public:
  Cyc() : c_{} {}
  explicit Cyc(const Rat& r) : c_{} { c_[0] = r; }
  explicit Cyc(long n) : c_{} { c_[0] = n; }
  Cyc(Rat a0, Rat a1, Rat a2, Rat a3)
      : c_{std::move(a0), std::move(a1), std::move(a2), std::move(a3)} {}

  static Cyc zero() { return Cyc(); }
  static Cyc one() { return Cyc(1); }
  // z = exp(i*pi/6)
  static Cyc zeta() { return Cyc(Rat(0), Rat(1), Rat(0), Rat(0)); }
  static Cyc zeta2() { return Cyc(Rat(0), Rat(0), Rat(1), Rat(0)); }
  // i = z^3
  static Cyc i_unit() { return Cyc(Rat(0), Rat(0), Rat(0), Rat(1)); }
  // q = exp(4*i*pi/3) = -z^2, the cubic root of unity used throughout
  static Cyc q() { return Cyc(Rat(0), Rat(0), Rat(-1), Rat(0)); }
  // q^{-1} = q^2 = z^2 - 1
  static Cyc q_inv() { return Cyc(Rat(-1), Rat(0), Rat(1), Rat(0)); }
  // q^{1/2} = exp(-i*pi/3) = 1 - z^2  (branch with q^{3/2} = -1)
  static Cyc q_half() { return Cyc(Rat(1), Rat(0), Rat(-1), Rat(0)); }
  // q^{-1/2} = exp(i*pi/3) = z^2
  static Cyc q_half_inv() { return zeta2(); }
  // omega = -q = exp(i*pi/3)
  static Cyc omega() { return zeta2(); }
  // omega^{1/2} = exp(i*pi/6) = z
  static Cyc omega_half() { return zeta(); }
  // omega^{-1/2} = conj(z) = z - z^3
  static Cyc omega_half_inv() { return Cyc(Rat(0), Rat(1), Rat(0), Rat(-1)); }
  static Cyc sqrt3() { return Cyc(Rat(0), Rat(2), Rat(0), Rat(-1)); }
  // loop weight tau = -q - q^{-1} at this q
  static Cyc tau_rs() { return one(); }

  const Rat& coeff(int k) const { return c_[static_cast<size_t>(k)]; }

  bool is_zero() const {
    return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
  }
  bool is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
  // Throws unless the value lies in Q.
  Rat rational_value() const {
    if (!is_rational()) throw ConfigError("value is not rational: " + str());
    return c_[0];
  }

  friend Cyc operator+(const Cyc& a, const Cyc& b) {
    Cyc r;
    for (int k = 0; k < 4; ++k) r.c_[k] = a.c_[k] + b.c_[k];
    return r;
  }
  friend Cyc operator-(const Cyc& a, const Cyc& b) {
    Cyc r;
    for (int k = 0; k < 4; ++k) r.c_[k] = a.c_[k] - b.c_[k];
    return r;
  }
  Cyc operator-() const {
    Cyc r;
    for (int k = 0; k < 4; ++k) r.c_[k] = -c_[k];
    return r;
  }
  friend Cyc operator*(const Cyc& a, const Cyc& b) {
    std::array<Rat, 7> f{};
    for (int i = 0; i < 4; ++i) {
      if (a.c_[i] == 0) continue;
      for (int j = 0; j < 4; ++j) {
        if (b.c_[j] == 0) continue;
        f[static_cast<size_t>(i + j)] += a.c_[i] * b.c_[j];
      }
    }
    // z^4 = z^2 - 1, z^5 = z^3 - z, z^6 = -1
    Cyc r(f[0] - f[4] - f[6], f[1] - f[5], f[2] + f[4], f[3] + f[5]);
    return r;
  }
  Cyc& operator+=(const Cyc& b) { return *this = *this + b; }
  Cyc& operator-=(const Cyc& b) { return *this = *this - b; }
  Cyc& operator*=(const Cyc& b) { return *this = *this * b; }

  friend bool operator==(const Cyc& a, const Cyc& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

  // Complex conjugation in the fixed embedding: z -> z - z^3.
  Cyc conj() const {
    return Cyc(c_[0] + c_[2], c_[1], -c_[2], -c_[1] - c_[3]);
  }
  // Galois images z -> z^k, k in {1,5,7,11}.
  Cyc galois(int k) const {
    switch (k) {
      case 1:
        return *this;
      case 5:
        return Cyc(c_[0] + c_[2], -c_[1], -c_[2], c_[1] + c_[3]);
      case 7:
        return Cyc(c_[0], -c_[1], c_[2], -c_[3]);
      case 11:
        return conj();
      default:
        throw ConfigError("galois exponent must be 1, 5, 7 or 11");
    }
  }

  Rat norm() const {
    Cyc n = *this * galois(5) * galois(7) * galois(11);
    if (n.c_[1] != 0 || n.c_[2] != 0 || n.c_[3] != 0)
      throw Error("field norm not rational");
    return n.c_[0];
  }

  Cyc inv() const {
    if (is_zero()) throw DivisionByZero("inverse of zero field element");
    Cyc adj = galois(5) * galois(7) * galois(11);
    Rat n = norm();
    Cyc r;
    for (int k = 0; k < 4; ++k) r.c_[k] = adj.c_[k] / n;
    return r;
  }
  friend Cyc operator/(const Cyc& a, const Cyc& b) { return a * b.inv(); }

  Cyc pow(long e) const {
    if (e < 0) return inv().pow(-e);
    Cyc r = one(), b = *this;
    while (e > 0) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

  Cyc real_part() const {
    Cyc s = *this + conj();
    Cyc r;
    for (int k = 0; k < 4; ++k) r.c_[k] = s.c_[k] / 2;
    return r;
  }
  bool is_real() const { return *this == conj(); }
  // |x|^2 = x * conj(x)
  Cyc abs2() const { return *this * conj(); }

  std::array<std::string, 4> to_strings() const {
    return {rat_to_string(c_[0]), rat_to_string(c_[1]), rat_to_string(c_[2]),
            rat_to_string(c_[3])};
  }
  static Cyc from_strings(const std::array<std::string, 4>& s) {
    return Cyc(rat_from_string(s[0]), rat_from_string(s[1]),
               rat_from_string(s[2]), rat_from_string(s[3]));
  }

  std::string str() const {
    static const char* names[4] = {"", "z", "z^2", "z^3"};
    std::string out;
    for (int k = 0; k < 4; ++k) {
      if (c_[k] == 0) continue;
      if (!out.empty()) out += " + ";
      out += rat_to_string(c_[k]);
      if (k > 0) out += std::string("*") + names[k];
    }
    return out.empty() ? "0" : out;
  }

  // Total ordering compatible with ==, for use as a map key.
  friend bool operator<(const Cyc& a, const Cyc& b) {
    for (int k = 0; k < 4; ++k) {
      int c = cmp(a.c_[k], b.c_[k]);
      if (c != 0) return c < 0;
    }
    return false;
  }

 private:
  std::array<Rat, 4> c_;
};

inline Cyc operator*(const Rat& r, const Cyc& x) { return Cyc(r) * x; }
inline Cyc rat_pow(const Rat& base, long e) {
  Cyc b(base);
  return b.pow(e);
}

}  // namespace looplab
