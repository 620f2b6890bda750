// SPDX-License-Identifier: MIT
#pragma once

#include <vector>

#include "looplab/errors.hpp"
#include "looplab/laurent.hpp"

namespace looplab {

template <class F>
using Matrix = std::vector<std::vector<F>>;

template <class F>
Matrix<F> mat_identity(size_t n) {
  Matrix<F> m(n, std::vector<F>(n, F()));
  for (size_t k = 0; k < n; ++k) m[k][k] = F(1);
  return m;
}

template <class F>
Matrix<F> mat_mul(const Matrix<F>& a, const Matrix<F>& b) {
  size_t n = a.size(), p = b.size(), q = p ? b[0].size() : 0;
  Matrix<F> r(n, std::vector<F>(q, F()));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < p; ++k) {
      if (a[i][k].is_zero()) continue;
      for (size_t j = 0; j < q; ++j) {
        if (b[k][j].is_zero()) continue;
        r[i][j] += a[i][k] * b[k][j];
      }
    }
  return r;
}

template <class F>
std::vector<F> mat_vec(const Matrix<F>& a, const std::vector<F>& v) {
  std::vector<F> r(a.size(), F());
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) {
      if (a[i][j].is_zero() || v[j].is_zero()) continue;
      r[i] += a[i][j] * v[j];
    }
  return r;
}

template <class F>
bool mat_equal(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) return false;
    for (size_t j = 0; j < a[i].size(); ++j)
      if (!(a[i][j] == b[i][j])) return false;
  }
  return true;
}

// Row-reduces in place over a field; returns pivot columns. Pivot choice is
// deterministic: first row with a nonzero entry in the current column.
template <class F>
std::vector<size_t> row_reduce(Matrix<F>& m) {
  std::vector<size_t> pivots;
  if (m.empty()) return pivots;
  size_t rows = m.size(), cols = m[0].size(), r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    F inv = F(1) / m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      F f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
size_t mat_rank(Matrix<F> m) {
  return row_reduce(m).size();
}

// Basis of the right kernel, each vector with its first nonzero entry = 1.
template <class F>
std::vector<std::vector<F>> kernel_basis(Matrix<F> m) {
  size_t cols = m.empty() ? 0 : m[0].size();
  std::vector<size_t> pivots = row_reduce(m);
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<F>> basis;
  for (size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(cols, F());
    v[free] = F(1);
    for (size_t r = 0; r < pivots.size(); ++r) {
      // row r reads: x_{pivots[r]} + sum_j m[r][j] x_j = 0
      v[pivots[r]] = F() - m[r][free];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class F>
F mat_det(Matrix<F> m) {
  size_t n = m.size();
  F det = F(1);
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) return F();
    if (p != c) {
      std::swap(m[p], m[c]);
      det = F() - det;
    }
    det = det * m[c][c];
    F inv = F(1) / m[c][c];
    for (size_t i = c + 1; i < n; ++i) {
      if (m[i][c].is_zero()) continue;
      F f = m[i][c] * inv;
      for (size_t j = c; j < n; ++j) m[i][j] = m[i][j] - f * m[c][j];
    }
  }
  return det;
}

// Fraction-free rank over the Laurent ring (Bareiss); divisions are exact.
inline size_t laurent_rank(Matrix<LaurentG> m) {
  if (m.empty()) return 0;
  size_t rows = m.size(), cols = m[0].size(), r = 0;
  LaurentG prev = LaurentG::one();
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (size_t i = r + 1; i < rows; ++i) {
      for (size_t j = c + 1; j < cols; ++j) {
        LaurentG t = m[i][j] * m[r][c] - m[i][c] * m[r][j];
        m[i][j] = t.divide_exact(prev);
      }
      m[i][c] = LaurentG::zero();
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

}  // namespace looplab
