// SPDX-License-Identifier: MIT
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "looplab/errors.hpp"
#include "looplab/schur.hpp"

using namespace looplab;

namespace {

std::vector<Cyc> cpts(std::initializer_list<long> v) {
  std::vector<Cyc> z;
  for (long x : v) z.push_back(Cyc(x));
  return z;
}

std::vector<Cyc> ones(int N) {
  return std::vector<Cyc>(static_cast<size_t>(N), Cyc::one());
}

}  // namespace

TEST_CASE("staircase shapes") {
  CHECK(staircase_paired(0) == Partition{});
  CHECK(staircase_paired(1) == Partition{1, 1});
  CHECK(staircase_paired(2) == Partition{2, 2, 1, 1});
  CHECK(staircase_paired(3) == Partition{3, 3, 2, 2, 1, 1});
  CHECK(staircase_clipped(0) == Partition{});
  CHECK(staircase_clipped(1) == Partition{1});
  CHECK(staircase_clipped(2) == Partition{2, 1, 1});
  CHECK(staircase_lower(1) == Partition{});
  CHECK(staircase_lower(2) == Partition{1, 1});
  CHECK(staircase_lower(3) == Partition{2, 2, 1, 1});
  CHECK_THROWS_AS(staircase_paired(-1), ConfigError);
  CHECK_THROWS_AS(staircase_lower(0), ConfigError);
  CHECK_THROWS_AS(validate_partition(Partition{1, 2}), ConfigError);
  CHECK_THROWS_AS(validate_partition(Partition{2, -1}), ConfigError);
}

TEST_CASE("schur evaluation basics") {
  auto z = cpts({1, 2, 3});
  CHECK(schur_eval({}, z) == Cyc::one());
  CHECK(schur_eval({1}, z) == Cyc(6));          // e1
  CHECK(schur_eval({1, 1}, z) == Cyc(11));      // e2
  CHECK(schur_eval({2}, z) == Cyc(25));         // h2
  CHECK(schur_eval({1, 1, 1}, z) == Cyc(6));    // e3
  CHECK(schur_eval({1, 1, 1, 1}, z) == Cyc());  // more rows than points
  CHECK(schur_eval({2, 0, 0}, z) == Cyc(25));   // trailing zero rows ignored
  // Works at repeated points.
  CHECK(schur_eval({1}, cpts({1, 1, 1})) == Cyc(3));
  CHECK(schur_eval({2, 1}, cpts({2, 2})) == Cyc(16));  // h2 e1 - e1 h0... = 16 at (2,2)
}

TEST_CASE("principal specialization matches dimension formula") {
  std::vector<Partition> shapes = {{}, {1},          {1, 1},       {2},
                                   {2, 1, 1},        {2, 2, 1, 1}, {3, 2, 2, 1, 1},
                                   staircase_paired(3)};
  for (const auto& lam : shapes)
    for (int N : {1, 2, 3, 5, 7})
      CHECK(schur_eval(lam, ones(N)) == Cyc(Rat(gl_dimension(lam, N))));
  CHECK(gl_dimension({1}, 3) == 3);
  CHECK(gl_dimension({1, 1}, 3) == 3);
  CHECK(gl_dimension({1, 1}, 4) == 6);
  CHECK(gl_dimension({2, 1, 1}, 4) == 15);
  CHECK(gl_dimension({2, 1, 1}, 5) == 45);
  CHECK(gl_dimension({3, 1}, 2) == 3);
  CHECK(gl_dimension({1, 1, 1}, 2) == 0);  // too many rows
}

TEST_CASE("paired and clipped staircases share their odd-size dimension") {
  // principal evaluation on 2n+1 points agrees for the two sum-rule shapes
  for (int n = 0; n <= 3; ++n) {
    int N = 2 * n + 1;
    CHECK(gl_dimension(staircase_paired(n), N) == gl_dimension(staircase_clipped(n), N));
  }
  CHECK(gl_dimension(staircase_paired(2), 5) == 45);
}

TEST_CASE("bialternant agrees with the determinant form") {
  std::vector<Partition> shapes = {{1}, {2, 1}, {2, 2, 1}, {3, 1}};
  auto z3 = cpts({1, 2, 3});
  auto z4 = cpts({2, 5, 7, 11});
  std::vector<Cyc> zq = {Cyc::q(), Cyc::one(), Cyc(2)};
  for (const auto& lam : shapes) {
    CHECK(schur_eval(lam, z3) == schur_eval_bialternant(lam, z3));
    CHECK(schur_eval(lam, z4) == schur_eval_bialternant(lam, z4));
    CHECK(schur_eval(lam, zq) == schur_eval_bialternant(lam, zq));
  }
  CHECK_THROWS_AS(schur_eval_bialternant({1}, cpts({2, 2, 3})), SingularEvaluation);
}

TEST_CASE("zero point and full column rules") {
  auto z = cpts({2, 3, 5});
  auto z0 = cpts({2, 3, 5, 0});
  // appending the point 0 is a no-op while the shape fits
  CHECK(schur_eval({2, 1}, z0) == schur_eval({2, 1}, z));
  CHECK(schur_eval({3, 2, 2}, z0) == schur_eval({3, 2, 2}, z));
  // a shape with one row per point factors out z_1...z_N
  CHECK(schur_eval({2, 1, 1}, z) == Cyc(30) * schur_eval({1}, z));
  CHECK(schur_eval({3, 3, 1}, z) == Cyc(30) * schur_eval({2, 2}, z));
  // one more row than points with a zero appended hits the empty column
  CHECK(schur_eval({1, 1}, cpts({2, 0})) == Cyc());
}

TEST_CASE("staircase inversion identity") {
  for (int n : {1, 2}) {
    int N = 2 * n + 1;
    std::vector<Cyc> z, zi;
    for (int k = 0; k < N; ++k) {
      z.push_back(Cyc(k + 2));
      zi.push_back(Cyc(k + 2).inv());
    }
    Cyc prod = Cyc::one();
    for (const Cyc& v : z) prod *= v;
    CHECK(schur_eval(staircase_clipped(n), zi) * prod.pow(n) ==
          schur_eval(staircase_paired(n), z));
  }
}

TEST_CASE("counting sequences") {
  std::vector<long> asm_vals = {1, 1, 2, 7, 42, 429, 7436, 218348};
  for (size_t n = 0; n < asm_vals.size(); ++n)
    CHECK(asm_count(static_cast<int>(n)) == Int(asm_vals[n]));

  std::vector<long> aht_vals = {1, 2, 3, 10, 25, 140, 588, 5544, 39204, 622908};
  for (size_t k = 0; k < aht_vals.size(); ++k)
    CHECK(aht_count(static_cast<int>(k) + 1) == Int(aht_vals[k]));
  CHECK_THROWS_AS(aht_count(0), ConfigError);

  std::vector<long> spin_vals = {1, 3, 15, 126, 1782};
  for (size_t n = 0; n < spin_vals.size(); ++n)
    CHECK(spin_sum_integer(static_cast<int>(n)) == Int(spin_vals[n]));

  // the odd-size half-turn count is the square of the spin constant
  for (int n = 0; n <= 4; ++n) CHECK(nn_squared(n) == aht_count(2 * n + 1));

  CHECK(nn_number(0) == Cyc::one());
  CHECK(nn_number(1) == Cyc::sqrt3());
  CHECK(nn_number(2) == Cyc(5));
  CHECK(nn_number(3) == Cyc(14) * Cyc::sqrt3());
  CHECK(nn_number(4) == Cyc(198));
  for (int n = 0; n <= 4; ++n) CHECK(nn_number(n) * nn_number(n) == Cyc(Rat(nn_squared(n))));
}

TEST_CASE("half-turn counts match the dimension expression") { CHECK(okada_check(10)); }

TEST_CASE("symbolic schur polynomials") {
  MPoly e2 = MPoly::var(3, 1) * MPoly::var(3, 2) + MPoly::var(3, 1) * MPoly::var(3, 3) +
             MPoly::var(3, 2) * MPoly::var(3, 3);
  CHECK(schur_poly({1, 1}, 3) == e2);
  CHECK(schur_poly({2, 1}, 2).eval(cpts({2, 3})) == schur_eval({2, 1}, cpts({2, 3})));
  CHECK(schur_poly({1, 1, 1}, 2).is_zero());
  CHECK(schur_poly({}, 2) == MPoly::constant(2, Cyc::one()));
}

TEST_CASE("pairing determinant") {
  // a single pair gives 1 regardless of the points
  CHECK(gaudin_eval(cpts({2, 5})) == Cyc::one());
  CHECK(gaudin_eval({Cyc::q(), Cyc(2)}) == Cyc::one());
  // q z1 - q^{-1} z2 vanishes at (q, 1): the kernel has a genuine pole there
  CHECK_THROWS_AS(gaudin_eval({Cyc::q(), Cyc::one()}), SingularEvaluation);
  CHECK(gaudin_eval_inf(cpts({7})) == Cyc::one());

  // invariant under reordering within a half
  Cyc g = gaudin_eval(cpts({1, 2, 3, 4}));
  CHECK(gaudin_eval(cpts({2, 1, 3, 4})) == g);
  CHECK(gaudin_eval(cpts({1, 2, 4, 3})) == g);
  Cyc gi = gaudin_eval_inf(cpts({1, 2, 3}));
  CHECK(gaudin_eval_inf(cpts({2, 1, 3})) == gi);

  // hand-expanded 2x2 limit: G_inf = (a23 b23 - a13 b13) / (z1 - z2)
  const Cyc q = Cyc::q(), qi = Cyc::q_inv(), qh = Cyc::q_half(), qhi = Cyc::q_half_inv();
  auto a = [&](const Cyc& x, const Cyc& y) { return q * x - qi * y; };
  auto b = [&](const Cyc& x, const Cyc& y) { return qh * x - qhi * y; };
  std::vector<std::vector<long>> samples = {{1, 2, 3}, {2, 5, 7}, {1, 3, 4}};
  for (const auto& s : samples) {
    Cyc z1(s[0]), z2(s[1]), z3(s[2]);
    Cyc hand = (a(z2, z3) * b(z2, z3) - a(z1, z3) * b(z1, z3)) / (z1 - z2);
    CHECK(gaudin_eval_inf({z1, z2, z3}) == hand);
  }
  CHECK(gaudin_eval_inf(cpts({1, 2, 3})) == Cyc(6));

  CHECK_THROWS_AS(gaudin_eval(cpts({1, 2, 3})), SizeParityMismatch);
  CHECK_THROWS_AS(gaudin_eval_inf(cpts({1, 2})), SizeParityMismatch);
  CHECK_THROWS_AS(gaudin_eval(cpts({1, 1, 2, 3})), SingularEvaluation);
  CHECK_THROWS_AS(gaudin_eval_inf(cpts({1, 1, 3})), SingularEvaluation);
}

TEST_CASE("base products") {
  // all factors collapse to (q - q^{-1}) at coincident points
  CHECK(base_product_odd(ones(3)) == Cyc::one());
  CHECK(base_product_odd(ones(5)) == Cyc::one());
  CHECK(base_product_evenic(ones(4)) == Cyc::one());
  CHECK(base_product_punctured(ones(4)) == Cyc::one());
  CHECK(base_product_odd(cpts({7})) == Cyc::one());

  // homogeneity of degree (number of pairs)
  auto z = cpts({1, 2, 3});
  auto z2 = cpts({2, 4, 6});
  CHECK(base_product_odd(z2) == Cyc(8) * base_product_odd(z));
  auto w = cpts({1, 2, 3, 4});
  auto w2 = cpts({2, 4, 6, 8});
  CHECK(base_product_punctured(w2) == Cyc(64) * base_product_punctured(w));
  CHECK(base_product_evenic(w2) == Cyc(4) * base_product_evenic(w));

  // the two-block form drops the cross pairs
  CHECK(base_product_evenic(w) != base_product_punctured(w));

  // orientation: the factor for a pair i < j is (q z_j - q^{-1} z_i), matching
  // the factors the exchange relation forces on separable components
  const Cyc q = Cyc::q(), qi = Cyc::q_inv();
  Cyc byhand = Cyc::one();
  long vals[3] = {1, 2, 3};
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) byhand *= (q * Cyc(vals[j]) - qi * Cyc(vals[i])) / (q - qi);
  CHECK(base_product_odd(z) == byhand);
  CHECK(base_product_odd(z) == Cyc(Rat(83, 9)) + Cyc(Rat(-46, 9)) * Cyc::zeta2());

  CHECK_THROWS_AS(base_product_odd(cpts({1, 2})), SizeParityMismatch);
  CHECK_THROWS_AS(base_product_evenic(cpts({1, 2, 3})), SizeParityMismatch);
  CHECK_THROWS_AS(base_product_punctured(cpts({1, 2, 3})), SizeParityMismatch);
}

TEST_CASE("fundamental component through the pairing determinant") {
  const Cyc q = Cyc::q(), qi = Cyc::q_inv();
  Cyc z1(5);
  // single point: the appended zero pairs as (q*0 - q^{-1} z_1), the
  // determinant part is 1
  CHECK(theta_base_eval({z1}) == Cyc() - qi * z1 / (q - qi));

  // homogeneous of degree (n+1)(2n+1) + n^2; n = 1 gives 7
  auto z = cpts({1, 2, 3});
  auto zs = cpts({2, 4, 6});
  CHECK(theta_base_eval(zs) == Cyc(128) * theta_base_eval(z));
  CHECK_THROWS_AS(theta_base_eval(cpts({1, 2})), SizeParityMismatch);
}
