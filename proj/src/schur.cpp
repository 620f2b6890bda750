// SPDX-License-Identifier: MIT

#include "looplab/schur.hpp"

#include <algorithm>
#include <utility>

#include "looplab/errors.hpp"
#include "looplab/linalg.hpp"
#include "looplab/ratfunc.hpp"

namespace looplab {

void validate_partition(const Partition& lambda) {
  for (size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] < 0) throw ConfigError("partition part is negative");
    if (i > 0 && lambda[i] > lambda[i - 1])
      throw ConfigError("partition parts must be weakly decreasing");
  }
}

Partition staircase_paired(int n) {
  if (n < 0) throw ConfigError("staircase index must be nonnegative");
  Partition p;
  for (int k = n; k >= 1; --k) {
    p.push_back(k);
    p.push_back(k);
  }
  return p;
}

Partition staircase_clipped(int n) {
  Partition p = staircase_paired(n);
  if (!p.empty()) p.erase(p.begin());
  return p;
}

Partition staircase_lower(int n) {
  if (n < 1) throw ConfigError("staircase index must be positive");
  return staircase_paired(n - 1);
}

namespace {

Partition trim_partition(Partition lam) {
  validate_partition(lam);
  while (!lam.empty() && lam.back() == 0) lam.pop_back();
  return lam;
}

// h_0..h_K at the given points; one pass per point keeps it division-free.
std::vector<Cyc> h_series(const std::vector<Cyc>& z, int K) {
  std::vector<Cyc> h(static_cast<size_t>(K) + 1);
  h[0] = Cyc::one();
  for (const Cyc& zi : z)
    for (int k = 1; k <= K; ++k) h[static_cast<size_t>(k)] += zi * h[static_cast<size_t>(k) - 1];
  return h;
}

Rat pow3(int e) {
  Rat r(1);
  for (int k = 0; k < e; ++k) r *= 3;
  return r;
}

Rat half_turn_ratio(int n) {
  // prod_{j=1..n} (3j-1)! / (n+j)!
  Rat r(1);
  for (int j = 1; j <= n; ++j)
    r *= Rat(factorial(static_cast<unsigned>(3 * j - 1))) /
         Rat(factorial(static_cast<unsigned>(n + j)));
  return r;
}

}  // namespace

Cyc schur_eval(const Partition& lambda, const std::vector<Cyc>& z) {
  Partition lam = trim_partition(lambda);
  if (lam.empty()) return Cyc::one();
  if (lam.size() > z.size()) return Cyc();
  int ell = static_cast<int>(lam.size());
  int K = lam[0] + ell;
  std::vector<Cyc> h = h_series(z, K);
  Matrix<Cyc> m(static_cast<size_t>(ell), std::vector<Cyc>(static_cast<size_t>(ell)));
  for (int i = 0; i < ell; ++i)
    for (int j = 0; j < ell; ++j) {
      int k = lam[static_cast<size_t>(i)] - i + j;
      m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          (k < 0) ? Cyc() : h[static_cast<size_t>(k)];
    }
  return mat_det(std::move(m));
}

Cyc schur_eval_bialternant(const Partition& lambda, const std::vector<Cyc>& z) {
  Partition lam = trim_partition(lambda);
  size_t N = z.size();
  if (lam.size() > N) return Cyc();
  lam.resize(N, 0);
  for (size_t i = 0; i < N; ++i)
    for (size_t j = i + 1; j < N; ++j)
      if (z[i] == z[j]) throw SingularEvaluation("bialternant requires distinct points");
  Matrix<Cyc> num(N, std::vector<Cyc>(N)), den(N, std::vector<Cyc>(N));
  for (size_t i = 0; i < N; ++i)
    for (size_t j = 0; j < N; ++j) {
      long e = static_cast<long>(N) - 1 - static_cast<long>(j);
      num[i][j] = z[i].pow(lam[j] + e);
      den[i][j] = z[i].pow(e);
    }
  return mat_det(std::move(num)) / mat_det(std::move(den));
}

namespace {

MPoly mpoly_det(const std::vector<std::vector<MPoly>>& m, std::vector<size_t> cols, size_t row,
                int nvars) {
  if (cols.empty()) return MPoly::constant(nvars, Cyc::one());
  MPoly det(nvars);
  for (size_t k = 0; k < cols.size(); ++k) {
    std::vector<size_t> rest;
    for (size_t t = 0; t < cols.size(); ++t)
      if (t != k) rest.push_back(cols[t]);
    MPoly minor = mpoly_det(m, rest, row + 1, nvars);
    MPoly term = m[row][cols[k]] * minor;
    det = (k % 2 == 0) ? det + term : det - term;
  }
  return det;
}

}  // namespace

MPoly schur_poly(const Partition& lambda, int nvars) {
  if (nvars < 0) throw ConfigError("variable count must be nonnegative");
  Partition lam = trim_partition(lambda);
  if (lam.empty()) return MPoly::constant(nvars, Cyc::one());
  if (static_cast<int>(lam.size()) > nvars) return MPoly(nvars);
  int ell = static_cast<int>(lam.size());
  int K = lam[0] + ell;
  std::vector<MPoly> h(static_cast<size_t>(K) + 1, MPoly(nvars));
  h[0] = MPoly::constant(nvars, Cyc::one());
  for (int v = 1; v <= nvars; ++v) {
    MPoly zv = MPoly::var(nvars, v);
    for (int k = 1; k <= K; ++k)
      h[static_cast<size_t>(k)] = h[static_cast<size_t>(k)] + zv * h[static_cast<size_t>(k) - 1];
  }
  std::vector<std::vector<MPoly>> m(static_cast<size_t>(ell),
                                    std::vector<MPoly>(static_cast<size_t>(ell), MPoly(nvars)));
  for (int i = 0; i < ell; ++i)
    for (int j = 0; j < ell; ++j) {
      int k = lam[static_cast<size_t>(i)] - i + j;
      if (k >= 0) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = h[static_cast<size_t>(k)];
    }
  std::vector<size_t> cols(static_cast<size_t>(ell));
  for (size_t c = 0; c < cols.size(); ++c) cols[c] = c;
  return mpoly_det(m, cols, 0, nvars);
}

Int gl_dimension(const Partition& lambda, int N) {
  if (N < 0) throw ConfigError("rank must be nonnegative");
  Partition lam = trim_partition(lambda);
  if (static_cast<int>(lam.size()) > N) return 0;
  lam.resize(static_cast<size_t>(N), 0);
  Rat r(1);
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j)
      r *= Rat(lam[static_cast<size_t>(i)] - lam[static_cast<size_t>(j)] + j - i) / Rat(j - i);
  return rat_to_int_exact(r);
}

Int asm_count(int n) {
  if (n < 0) throw ConfigError("size must be nonnegative");
  Rat r(1);
  for (int j = 0; j < n; ++j)
    r *= Rat(factorial(static_cast<unsigned>(3 * j + 1))) /
         Rat(factorial(static_cast<unsigned>(n + j)));
  return rat_to_int_exact(r);
}

Int aht_count(int L) {
  if (L < 1) throw ConfigError("size must be positive");
  Rat r(1);
  if (L % 2 == 0) {
    int n = L / 2;
    for (int j = 0; j < n; ++j) {
      Rat f = Rat(factorial(static_cast<unsigned>(3 * j + 1))) /
              Rat(factorial(static_cast<unsigned>(n + j)));
      r *= Rat(3 * j + 2) / Rat(3 * j + 1) * f * f;
    }
  } else {
    int n = (L - 1) / 2;
    for (int j = 1; j <= n; ++j) {
      Rat f = Rat(factorial(static_cast<unsigned>(3 * j))) *
              Rat(factorial(static_cast<unsigned>(j))) /
              (Rat(factorial(static_cast<unsigned>(2 * j))) *
               Rat(factorial(static_cast<unsigned>(2 * j))));
      r *= Rat(4) / Rat(3) * f * f;
    }
  }
  return rat_to_int_exact(r);
}

Int nn_squared(int n) {
  if (n < 0) throw ConfigError("size must be nonnegative");
  Rat f = half_turn_ratio(n);
  return rat_to_int_exact(pow3(n) * f * f);
}

Int spin_sum_integer(int n) {
  if (n < 0) throw ConfigError("size must be nonnegative");
  return rat_to_int_exact(pow3(n) * half_turn_ratio(n));
}

Cyc nn_number(int n) {
  if (n < 0) throw ConfigError("size must be nonnegative");
  return Cyc::sqrt3().pow(n) * Cyc(half_turn_ratio(n));
}

bool okada_check(int L) {
  if (L < 1) throw ConfigError("size must be positive");
  for (int size = 1; size <= L; ++size) {
    Rat lhs(aht_count(size));
    Rat rhs;
    if (size % 2 == 1) {
      int n = (size - 1) / 2;
      Rat d(gl_dimension(staircase_clipped(n), size));
      rhs = d * d / pow3(n * n);
    } else {
      int n = size / 2;
      rhs = Rat(gl_dimension(staircase_lower(n), size)) *
            Rat(gl_dimension(staircase_clipped(n), size)) / pow3(n * (n - 1));
    }
    if (lhs != rhs) return false;
  }
  return true;
}

Cyc gaudin_eval(const std::vector<Cyc>& z) {
  size_t m = z.size();
  if (m == 0 || m % 2 != 0) throw SizeParityMismatch("pairing determinant needs 2n+2 points");
  size_t half = m / 2;
  for (size_t blk = 0; blk < 2; ++blk)
    for (size_t i = 0; i < half; ++i)
      for (size_t j = i + 1; j < half; ++j)
        if (z[blk * half + i] == z[blk * half + j])
          throw SingularEvaluation("coincident points within a half");
  const Cyc q = Cyc::q(), qi = Cyc::q_inv(), qh = Cyc::q_half(), qhi = Cyc::q_half_inv();
  Cyc pref = Cyc::one();
  Matrix<Cyc> mat(half, std::vector<Cyc>(half));
  for (size_t i = 0; i < half; ++i)
    for (size_t j = 0; j < half; ++j) {
      Cyc prod = (q * z[i] - qi * z[half + j]) * (qh * z[i] - qhi * z[half + j]);
      if (prod.is_zero()) throw SingularEvaluation("pairing determinant pole");
      pref *= prod;
      mat[i][j] = prod.inv();
    }
  for (size_t blk = 0; blk < 2; ++blk)
    for (size_t i = 0; i < half; ++i)
      for (size_t j = i + 1; j < half; ++j)
        pref = pref / (z[blk * half + i] - z[blk * half + j]);
  return pref * mat_det(std::move(mat));
}

Cyc gaudin_eval_inf(const std::vector<Cyc>& z) {
  size_t m = z.size();
  if (m % 2 != 1) throw SizeParityMismatch("limit form needs 2n+1 points");
  int n = (static_cast<int>(m) - 1) / 2;
  size_t half = static_cast<size_t>(n) + 1;  // rows z[0..n], columns z[n+1..2n] then Z
  for (size_t i = 0; i < half; ++i)
    for (size_t j = i + 1; j < half; ++j)
      if (z[i] == z[j]) throw SingularEvaluation("coincident points within a half");
  for (size_t i = 0; i + 1 < half; ++i)
    for (size_t j = i + 1; j + 1 < half; ++j)
      if (z[half + i] == z[half + j])
        throw SingularEvaluation("coincident points within a half");
  const Cyc q = Cyc::q(), qi = Cyc::q_inv(), qh = Cyc::q_half(), qhi = Cyc::q_half_inv();
  RatFunc pref(1);
  Matrix<RatFunc> mat(half, std::vector<RatFunc>(half));
  for (size_t i = 0; i < half; ++i) {
    for (size_t j = 0; j + 1 < half; ++j) {
      Cyc prod = (q * z[i] - qi * z[half + j]) * (qh * z[i] - qhi * z[half + j]);
      if (prod.is_zero()) throw SingularEvaluation("pairing determinant pole");
      pref *= RatFunc(prod);
      mat[i][j] = RatFunc(prod.inv());
    }
    // last column: the point at Z, kept symbolic
    RatFunc prod(poly_mul(poly_linear(q * z[i], Cyc() - qi), poly_linear(qh * z[i], Cyc() - qhi)),
                 poly_const(Cyc::one()));
    pref *= prod;
    mat[i][half - 1] = RatFunc(1) / prod;
  }
  for (size_t i = 0; i < half; ++i)
    for (size_t j = i + 1; j < half; ++j) pref = pref / RatFunc(z[i] - z[j]);
  for (size_t i = 0; i + 1 < half; ++i) {
    for (size_t j = i + 1; j + 1 < half; ++j)
      pref = pref / RatFunc(z[half + i] - z[half + j]);
    pref = pref / RatFunc(poly_linear(z[half + i], Cyc(-1)), poly_const(Cyc::one()));
  }
  RatFunc g = pref * mat_det(std::move(mat));
  return g.limit_at_infinity(n);
}

namespace {

// Factor orientation matches the exchange operator: a component with points
// i < j separable picks up (q z_j - q^{-1} z_i).
Cyc pair_product(const std::vector<Cyc>& z, size_t lo, size_t hi) {
  const Cyc q = Cyc::q(), qi = Cyc::q_inv();
  const Cyc scale = (q - qi).inv();
  Cyc r = Cyc::one();
  for (size_t i = lo; i < hi; ++i)
    for (size_t j = i + 1; j < hi; ++j) r *= (q * z[j] - qi * z[i]) * scale;
  return r;
}

}  // namespace

Cyc base_product_odd(const std::vector<Cyc>& z) {
  if (z.size() % 2 != 1) throw SizeParityMismatch("odd base product needs 2n+1 points");
  return pair_product(z, 0, z.size());
}

Cyc base_product_evenic(const std::vector<Cyc>& z) {
  if (z.size() % 2 != 0 || z.empty())
    throw SizeParityMismatch("two-block base product needs 2n points");
  size_t n = z.size() / 2;
  return pair_product(z, 0, n) * pair_product(z, n, z.size());
}

Cyc base_product_punctured(const std::vector<Cyc>& z) {
  if (z.size() % 2 != 0 || z.empty())
    throw SizeParityMismatch("punctured base product needs 2n points");
  return pair_product(z, 0, z.size());
}

Cyc theta_base_eval(const std::vector<Cyc>& z) {
  if (z.size() % 2 != 1) throw SizeParityMismatch("theta component needs 2n+1 points");
  std::vector<Cyc> ext = z;
  ext.push_back(Cyc());
  return base_product_punctured(ext) * gaudin_eval_inf(z);
}

}  // namespace looplab
