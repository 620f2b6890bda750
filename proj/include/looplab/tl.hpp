// SPDX-License-Identifier: MIT
//
// Matrix forms of the Temperley-Lieb action on link patterns, the skein
// crossing operators, and the strand-adding projections.
#pragma once

#include "looplab/cyc.hpp"
#include "looplab/laurent.hpp"
#include "looplab/linalg.hpp"
#include "looplab/pattern.hpp"

namespace looplab {

template <class Coef>
struct TLTraits;

template <>
struct TLTraits<Cyc> {
  static Cyc one() { return Cyc::one(); }
  static Cyc qhalf() { return Cyc::q_half(); }
  static Cyc qhalf_inv() { return Cyc::q_half_inv(); }
  static Cyc tau_contractible() { return Cyc::tau_rs(); }
  static Cyc tau_wrapping() { return Cyc::one(); }
};

template <>
struct TLTraits<LaurentG> {
  static LaurentG one() { return LaurentG::one(); }
  static LaurentG qhalf() { return LaurentG::s(1); }
  static LaurentG qhalf_inv() { return LaurentG::s(-1); }
  static LaurentG tau_contractible() { return LaurentG::tau(); }
  static LaurentG tau_wrapping() { return LaurentG::tau(); }
};

template <class Coef>
Matrix<Coef> build_e_matrix(const Basis& basis, int i) {
  size_t n = basis.size();
  Matrix<Coef> m(n, std::vector<Coef>(n, Coef()));
  for (size_t c = 0; c < n; ++c) {
    EResult r = apply_e(i, basis.pats[c]);
    Coef w = TLTraits<Coef>::one();
    for (int k = 0; k < r.contractible; ++k)
      w = w * TLTraits<Coef>::tau_contractible();
    for (int k = 0; k < r.wrapping; ++k)
      w = w * TLTraits<Coef>::tau_wrapping();
    m[static_cast<size_t>(basis.find(r.pat))][c] = w;
  }
  return m;
}

template <class Coef>
Matrix<Coef> build_rotation_matrix(const Basis& basis) {
  size_t n = basis.size();
  Matrix<Coef> m(n, std::vector<Coef>(n, Coef()));
  for (size_t c = 0; c < n; ++c)
    m[static_cast<size_t>(basis.find(rotate(basis.pats[c])))][c] =
        TLTraits<Coef>::one();
  return m;
}

// Over-crossing t_i = q^{1/2} I + q^{-1/2} e_i, under-crossing its inverse
// q^{-1/2} I + q^{1/2} e_i; the product is the identity since
// q + q^{-1} + tau = 0.
template <class Coef>
std::vector<Coef> apply_crossing(const Matrix<Coef>& e_matrix,
                                 const std::vector<Coef>& xi, bool over) {
  Coef a = over ? TLTraits<Coef>::qhalf() : TLTraits<Coef>::qhalf_inv();
  Coef b = over ? TLTraits<Coef>::qhalf_inv() : TLTraits<Coef>::qhalf();
  std::vector<Coef> exi = mat_vec(e_matrix, xi);
  std::vector<Coef> out(xi.size(), Coef());
  for (size_t k = 0; k < xi.size(); ++k) out[k] = a * xi[k] + b * exi[k];
  return out;
}

// Check operator R(z, w) = [(q z - q^{-1} w) I + (z - w) e_i] / (q w - q^{-1} z)
// at the cubic root of unity.
Matrix<Cyc> build_rhat(const Basis& basis, int i, const Cyc& z, const Cyc& w);

// Matrix of the strand-adding projection on pattern bases (rows in the
// larger basis).
Matrix<Cyc> build_projection_matrix(const Basis& from, const Basis& to,
                                    bool to_infinity);

// Gram matrix of the gluing pairing, entries tau^{#loops}.
template <class Coef>
Matrix<Coef> build_gram(const Basis& basis, const Coef& tau) {
  size_t n = basis.size();
  Matrix<Coef> g(n, std::vector<Coef>(n, Coef()));
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) {
      int loops = paste_loops(basis.pats[a], basis.pats[b]);
      Coef w = TLTraits<Coef>::one();
      for (int k = 0; k < loops; ++k) w = w * tau;
      g[a][b] = w;
    }
  return g;
}

}  // namespace looplab
