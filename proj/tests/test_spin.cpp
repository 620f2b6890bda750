// SPDX-License-Identifier: MIT
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <string>
#include <vector>

#include "looplab/cyc.hpp"
#include "looplab/eigvec.hpp"
#include "looplab/errors.hpp"
#include "looplab/laurent.hpp"
#include "looplab/linalg.hpp"
#include "looplab/pattern.hpp"
#include "looplab/schur.hpp"
#include "looplab/spin.hpp"
#include "looplab/transfer.hpp"

using namespace looplab;

namespace {

Rat rq(long n, long d) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

std::vector<Cyc> zs(std::initializer_list<long> v) {
  std::vector<Cyc> r;
  for (long x : v) r.emplace_back(x);
  return r;
}

// deterministic scattered rationals, distinct and nonzero
std::vector<Cyc> sample_z(int L, int seed) {
  std::vector<Cyc> r;
  for (int i = 0; i < L; ++i)
    r.emplace_back(rq(2 * i * i + 3 + 7 * seed, i + 1 + (seed % 3)));
  return r;
}

std::map<std::string, int> multiset(const std::vector<Cyc>& v) {
  std::map<std::string, int> m;
  for (const Cyc& c : v) ++m[c.str()];
  return m;
}

void check_all(const std::vector<CheckResult>& rs) {
  for (const CheckResult& r : rs) {
    CAPTURE(r.anchor);
    CHECK(r.pass);
  }
}

}  // namespace

TEST_CASE("sector bases") {
  SpinBasis b3 = make_spin_basis(3);
  CHECK(b3.size() == 3);
  CHECK(b3.plus_count == 2);
  CHECK(spin_word_string(3, b3.words[0]) == "++-");
  SpinBasis b4 = make_spin_basis(4);
  CHECK(b4.size() == 6);
  CHECK(spin_word_string(4, b4.words[0]) == "++--");
  CHECK(b4.find(b4.words[4]) == 4);
  CHECK(b4.find(1u) == -1);  // wrong magnetization
  CHECK(make_spin_basis(7).size() == 35);
  CHECK_THROWS_AS(make_spin_basis(0), ConfigError);
}

TEST_CASE("R matrix special points") {
  // equal parameters give the swap
  Matrix<Cyc> R = build_r_spin(Cyc(rq(3, 2)), Cyc(rq(3, 2)));
  Matrix<Cyc> swap(4, std::vector<Cyc>(4));
  swap[0][0] = swap[1][2] = swap[2][1] = swap[3][3] = Cyc::one();
  CHECK(mat_equal(R, swap));

  // z = 0: -q^{-1} diag(q^{-1}, 1, 1, q^{-1}) plus the single hop entry
  const Cyc q = Cyc::q(), qi = Cyc::q_inv();
  Matrix<Cyc> R0 = build_r_spin(Cyc(), Cyc(11));
  Cyc f = Cyc() - qi;
  CHECK(R0[0][0] == f * qi);
  CHECK(R0[1][1] == f);
  CHECK(R0[1][2] == f * (qi - q));
  CHECK(R0[2][1].is_zero());
  CHECK(R0[2][2] == f);
  CHECK(R0[3][3] == f * qi);

  // pole at q t = q^{-1} z
  CHECK_THROWS_AS(build_r_spin(q * q * Cyc(5), Cyc(5)), SingularEvaluation);
}

TEST_CASE("two site generator") {
  Matrix<Cyc> e = spin_tl_generator();
  // tau = 1 at this q, so e is idempotent
  CHECK(mat_equal(mat_mul(e, e), e));

  Matrix<LaurentG> eg = spin_tl_generator_generic();
  Matrix<LaurentG> sq = mat_mul(eg, eg);
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) CHECK(sq[i][j] == LaurentG::tau() * eg[i][j]);

  // P R(z,w) = [(q z - q^{-1} w) + (z - w) e] / (q w - q^{-1} z)
  const Cyc q = Cyc::q(), qi = Cyc::q_inv();
  for (auto [zv, wv] : {std::pair<long, long>{2, 7}, {5, 3}}) {
    Cyc z(zv), w(wv);
    Matrix<Cyc> R = build_r_spin(z, w);
    Matrix<Cyc> PR(4, std::vector<Cyc>(4));
    for (size_t a = 0; a < 4; ++a) {
      size_t swapped = (a == 1) ? 2 : (a == 2) ? 1 : a;
      PR[swapped] = R[a];
    }
    Cyc den = (q * w - qi * z).inv();
    Matrix<Cyc> rhs = mat_identity<Cyc>(4);
    for (size_t i = 0; i < 4; ++i)
      for (size_t j = 0; j < 4; ++j)
        rhs[i][j] = ((i == j ? q * z - qi * w : Cyc()) + (z - w) * e[i][j]) * den;
    CHECK(mat_equal(PR, rhs));
  }
}

TEST_CASE("transfer matrix small sizes") {
  // size one: identically (1)
  SpinBasis b1 = make_spin_basis(1);
  for (long tv : {2, 5, 11}) {
    Matrix<Cyc> T = build_spin_transfer(b1, zs({3}), Cyc(tv));
    CHECK(T.size() == 1);
    CHECK(T[0][0] == Cyc::one());
  }

  // size two: eigenvalue 1 exists
  SpinBasis b2 = make_spin_basis(2);
  Matrix<Cyc> T2 = build_spin_transfer(b2, zs({1, 4}), Cyc(7));
  for (size_t i = 0; i < 2; ++i) T2[i][i] -= Cyc::one();
  CHECK(mat_det(T2).is_zero());

  // size three: the unit eigenvector is already isolated at one t
  SpinBasis b3 = make_spin_basis(3);
  Matrix<Cyc> T3 = build_spin_transfer(b3, zs({1, 2, 3}), Cyc(5));
  for (size_t i = 0; i < 3; ++i) T3[i][i] -= Cyc::one();
  CHECK(kernel_basis(T3).size() == 1);

  CHECK_THROWS_AS(build_spin_transfer(b3, zs({1, 2}), Cyc(5)), ConfigError);
}

TEST_CASE("hamiltonian size two block") {
  Matrix<Cyc> H = xxz_hamiltonian(make_spin_basis(2));
  const Cyc q = Cyc::q(), qi = Cyc::q_inv();
  Cyc mhalf(rq(-1, 2));
  CHECK(H[0][0] == mhalf);
  CHECK(H[1][1] == mhalf);
  CHECK(H[0][1] == Cyc() - Cyc::one() - qi * qi);
  CHECK(H[1][0] == Cyc() - Cyc::one() - q * q);
  CHECK_THROWS_AS(xxz_hamiltonian(make_spin_basis(1)), ConfigError);
}

TEST_CASE("hamiltonian checks through size seven") {
  for (int L = 2; L <= 7; ++L) check_all(verify_spin_hamiltonian(L));
}

TEST_CASE("ground state frozen homogeneous vectors") {
  CHECK(spin_homogeneous_components(1) == zs({1}));
  CHECK(spin_homogeneous_components(3) == zs({1, 1, 1}));

  std::vector<Cyc> v5 = spin_homogeneous_components(5);
  std::map<std::string, int> m5 = multiset(v5);
  CHECK(m5[Cyc(1).str()] == 5);
  CHECK(m5[Cyc(2).str()] == 5);
  SpinBasis b5 = make_spin_basis(5);
  CHECK(v5[static_cast<size_t>(b5.find(0b00111))] == Cyc::one());

  std::map<std::string, int> m7 = multiset(spin_homogeneous_components(7));
  CHECK(m7[Cyc(1).str()] == 7);
  CHECK(m7[Cyc(3).str()] == 14);
  CHECK(m7[Cyc(4).str()] == 7);
  CHECK(m7[Cyc(7).str()] == 7);

  // size two: the single arch split into its two spin words
  std::vector<Cyc> v2 = spin_homogeneous_components(2);
  CHECK(v2[0] == Cyc::omega_half_inv());
  CHECK(v2[1] == Cyc::omega_half());

  // size four, exact values
  std::vector<Cyc> v4 = spin_homogeneous_components(4);
  std::map<std::string, int> m4 = multiset(v4);
  Cyc z2 = Cyc::zeta2();
  CHECK(m4[(Cyc::one() + z2).str()] == 1);       // sqrt3 e^{+i pi/6}
  CHECK(m4[(Cyc(2) - z2).str()] == 1);           // sqrt3 e^{-i pi/6}
  CHECK(m4[z2.str()] == 1);                      // e^{+i pi/3}
  CHECK(m4[(Cyc::one() - z2).str()] == 1);       // e^{-i pi/3}
  CHECK(m4[Cyc::one().str()] == 2);
  SpinBasis b4 = make_spin_basis(4);
  CHECK(v4[static_cast<size_t>(b4.find(0b0011))] == Cyc::omega().inv());
  CHECK(v4[static_cast<size_t>(b4.find(0b0101))] == Cyc(2) - z2);

  // size six: squared moduli and the two seven-component families
  std::vector<Cyc> v6 = spin_homogeneous_components(6);
  std::map<std::string, int> a6;
  for (const Cyc& c : v6) ++a6[c.abs2().str()];
  CHECK(a6[Cyc(25).str()] == 2);
  CHECK(a6[Cyc(7).str()] == 12);
  CHECK(a6[Cyc(1).str()] == 6);
  std::map<std::string, int> m6 = multiset(v6);
  Cyc zeta = Cyc::zeta();
  Cyc seven = Cyc(3) * zeta - zeta.pow(3);  // sqrt7 e^{i arctan(1/(3 sqrt3))}
  CHECK(m6[seven.str()] == 3);
  CHECK(m6[seven.conj().str()] == 3);
  SpinBasis b6 = make_spin_basis(6);
  CHECK(v6[static_cast<size_t>(b6.find(0b010101))] ==
        Cyc(5) * Cyc::omega_half_inv());
}

TEST_CASE("ground state at scattered points") {
  for (int L = 2; L <= 6; ++L)
    for (int seed : {0, 1}) {
      std::vector<Cyc> z = sample_z(L, seed);
      SpinEigvec v = spin_ground_state(z);
      CHECK(v.comp[static_cast<size_t>(v.base_index)] ==
            spin_base_value(L, z));
      // eigenvector property at a parameter not used by the solver
      Matrix<Cyc> T = build_spin_transfer(v.basis, z, Cyc(37));
      CHECK(mat_vec(T, v.comp) == v.comp);
    }
  // a vanishing site parameter kills the separated product on odd chains
  CHECK_THROWS_AS(spin_ground_state(zs({1, 2, 0})), BaseComponentZero);
}

TEST_CASE("arch to spin map") {
  Basis lb2 = make_basis(Kind::EvenIC, 2);
  SpinBasis sb2 = make_spin_basis(2);
  std::vector<Cyc> col = map_S(lb2.pats[0], sb2);
  CHECK(col[0] == Cyc::omega_half_inv());
  CHECK(col[1] == Cyc::omega_half());

  Pattern punc = make_basis(Kind::Punctured, 4).pats[0];
  CHECK_THROWS_AS(map_S(punc, make_spin_basis(4)), SizeParityMismatch);
  CHECK_THROWS_AS(map_S(lb2.pats[0], make_spin_basis(4)), SizeParityMismatch);

  // odd size three: defect word pinned, arch coefficients unimodular
  Basis lb3 = make_basis(Kind::Odd, 3);
  SpinBasis sb3 = make_spin_basis(3);
  Matrix<Cyc> S = map_S_matrix(lb3, sb3);
  for (size_t c = 0; c < lb3.size(); ++c) {
    int nonzero = 0;
    for (size_t r = 0; r < sb3.size(); ++r)
      if (!S[r][c].is_zero()) {
        ++nonzero;
        CHECK(S[r][c].abs2() == Cyc::one());
      }
    CHECK(nonzero == 2);
  }
}

TEST_CASE("strand adding maps") {
  SpinBasis b3 = make_spin_basis(3), b4 = make_spin_basis(4);
  Matrix<Cyc> Q = map_Q(b3, b4);
  CHECK(Q.size() == b4.size());
  // the word is preserved, the new site reads minus
  for (size_t c = 0; c < b3.size(); ++c)
    for (size_t r = 0; r < b4.size(); ++r)
      CHECK(Q[r][c] == (b4.words[r] == b3.words[c] ? Cyc::one() : Cyc()));
  CHECK_THROWS_AS(map_Q(b4, make_spin_basis(5)), SizeParityMismatch);
  CHECK_THROWS_AS(map_Q(b3, make_spin_basis(6)), SizeParityMismatch);

  Matrix<Cyc> Pp = proj_P(b4, true), Pm = proj_P(b4, false);
  Matrix<Cyc> sum = Pp;
  for (size_t i = 0; i < b4.size(); ++i)
    for (size_t j = 0; j < b4.size(); ++j) sum[i][j] += Pm[i][j];
  CHECK(mat_equal(sum, mat_identity<Cyc>(b4.size())));
  for (const auto& row : mat_mul(Pp, Pm))
    for (const Cyc& c : row) CHECK(c.is_zero());
}

TEST_CASE("relations at scattered points") {
  for (int L = 2; L <= 6; ++L)
    for (int seed : {0, 1}) check_all(verify_spin_relations(L, sample_z(L, seed)));
}

TEST_CASE("relation anchors present") {
  std::vector<CheckResult> rs = verify_spin_relations(5, sample_z(5, 0));
  std::map<std::string, int> seen;
  for (const CheckResult& r : rs) ++seen[r.anchor];
  for (const char* a :
       {"spin-loop-intertwine-odd", "spin-loop-schur-factor-odd",
        "spin-odd-even-transfer", "spin-plus-sector-stable",
        "spin-odd-even-eigvec", "spin-odd-even-sum-chain", "spin-s-rank-odd",
        "spin-s-kernel-match-odd"})
    CHECK(seen[a] == 1);
}

TEST_CASE("sum rules at scattered points") {
  for (int L = 2; L <= 6; ++L)
    for (int seed : {0, 1}) check_all(verify_spin_sum_rules(sample_z(L, seed)));
  // spot value: sum at z = (1,2,3) is the elementary symmetric e_2
  SpinEigvec v = spin_ground_state(zs({1, 2, 3}));
  CHECK(component_sum(v) == Cyc(11));
}

TEST_CASE("sum rules at the homogeneous point") {
  for (int L = 2; L <= 7; ++L) {
    std::vector<CheckResult> rs = verify_spin_sum_rules_homogeneous(L);
    check_all(rs);
    for (const CheckResult& r : rs)
      if (r.anchor == "spin-hom-max-odd" || r.anchor == "spin-hom-max-even")
        CHECK(r.conjecture);
  }
}
