#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "ffmc/errors.hpp"
#include "ffmc/matf.hpp"
#include "ffmc/matpoly.hpp"
#include "ffmc/verify.hpp"

using namespace ffmc;

namespace {

// Independent determinant oracle: full permutation expansion.
Gf::El det_by_permutation_expansion(const MatF& M) {
  const Gf& F = *M.field();
  const int n = M.rows();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Gf::El acc = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Gf::El term = 1;
    for (int i = 0; i < n; ++i) term = F.mul(term, M.at(i, perm[i]));
    acc = F.add(acc, inversions % 2 ? F.neg(term) : term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

MatF random_mat(const GfPtr& F, int r, int c, SplitMix64& g) {
  MatF M(F, r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) M.set(i, j, static_cast<Gf::El>(g.below(F->order())));
  return M;
}

MatF random_invertible(const GfPtr& F, int n, SplitMix64& g) {
  while (true) {
    MatF M = random_mat(F, n, n, g);
    if (det(M) != 0) return M;
  }
}

MatF companion(const Poly& f) {
  const GfPtr& F = f.field();
  const int n = f.degree().value();
  MatF C(F, n, n);
  for (int i = 0; i + 1 < n; ++i) C.set(i + 1, i, 1);
  for (int i = 0; i < n; ++i) C.set(i, n - 1, F->neg(f.coeff(i)));
  return C;
}

bool in_rref(const MatF& M) {
  int prev = -1;
  for (int i = 0; i < M.rows(); ++i) {
    int p = -1;
    for (int j = 0; j < M.cols(); ++j)
      if (M.at(i, j) != 0) {
        p = j;
        break;
      }
    if (p < 0) return false;  // canonical bases carry no zero rows
    if (p <= prev || M.at(i, p) != 1) return false;
    for (int r = 0; r < M.rows(); ++r)
      if (r != i && M.at(r, p) != 0) return false;
    prev = p;
  }
  return true;
}

}  // namespace

TEST_CASE("rref basics") {
  auto F2 = Gf::make(2);
  SUBCASE("identity is fixed") {
    auto res = rref(MatF::identity(F2, 3));
    CHECK(res.R == MatF::identity(F2, 3));
    CHECK(res.rank == 3);
  }
  SUBCASE("zero matrix is fixed with rank 0") {
    auto res = rref(MatF::zero(F2, 2, 3));
    CHECK(res.R == MatF::zero(F2, 2, 3));
    CHECK(res.rank == 0);
  }
  SUBCASE("equal rows collapse") {
    MatF M(F2, 2, 2, {1, 1, 1, 1});
    CHECK(rref(M).rank == 1);
  }
  SUBCASE("idempotence on random matrices") {
    SplitMix64 g(3);
    auto F3 = Gf::make(3);
    for (int it = 0; it < 100; ++it) {
      MatF M = random_mat(F3, 1 + g.below(4), 1 + g.below(4), g);
      auto r1 = rref(M);
      auto r2 = rref(r1.R);
      CHECK(r1.R == r2.R);
      CHECK(r1.rank == r2.rank);
    }
  }
}

TEST_CASE("determinant") {
  auto F2 = Gf::make(2);
  CHECK(det(MatF::identity(F2, 4)) == 1);
  MatF singular(F2, 2, 2, {1, 1, 1, 1});
  CHECK(det(singular) == 0);
  CHECK(rank(singular) < 2);
  CHECK_THROWS_AS(det(MatF::zero(F2, 2, 3)), DomainError);

  SUBCASE("agrees with permutation expansion; multiplicative") {
    SplitMix64 g(5);
    for (std::uint64_t q : {2ull, 3ull, 4ull}) {
      auto F = Gf::from_order(q);
      for (int it = 0; it < 60; ++it) {
        const int n = 1 + static_cast<int>(g.below(4));
        MatF A = random_mat(F, n, n, g), B = random_mat(F, n, n, g);
        CHECK(det(A) == det_by_permutation_expansion(A));
        CHECK(det(A * B) == F->mul(det(A), det(B)));
      }
    }
  }
}

TEST_CASE("inverse") {
  SplitMix64 g(9);
  auto F3 = Gf::make(3);
  for (int it = 0; it < 50; ++it) {
    const int n = 1 + static_cast<int>(g.below(4));
    MatF M = random_invertible(F3, n, g);
    auto Mi = inverse(M);
    REQUIRE(Mi.has_value());
    CHECK(M * *Mi == MatF::identity(F3, n));
  }
  MatF singular(F3, 2, 2, {1, 2, 2, 1});  // det = 1*1 - 2*2 = 0 mod 3
  CHECK(det(singular) == 0);
  CHECK_FALSE(inverse(singular).has_value());
}

TEST_CASE("kernel") {
  auto F2 = Gf::make(2);
  SUBCASE("zero map has full kernel") {
    auto K = kernel(MatF::zero(F2, 3, 3));
    CHECK(K.dim() == 3);
    CHECK(K.basis == MatF::identity(F2, 3));
  }
  SUBCASE("kernel rows are annihilated and canonical") {
    SplitMix64 g(17);
    auto F3 = Gf::make(3);
    for (int it = 0; it < 80; ++it) {
      MatF M = random_mat(F3, 1 + g.below(4), 1 + g.below(4), g);
      auto K = kernel(M);
      CHECK(K.dim() == M.cols() - rank(M));
      CHECK((K.dim() == 0 || in_rref(K.basis)));
      CHECK((M * K.basis.transpose()).is_zero());
    }
  }
}

TEST_CASE("characteristic polynomial") {
  auto F2 = Gf::make(2);
  SUBCASE("companion matrix reproduces its polynomial") {
    for (std::uint64_t q : {2ull, 3ull}) {
      auto F = Gf::from_order(q);
      for (int n = 1; n <= 4; ++n)
        for (const Poly& f : monic_polys(F, n)) CHECK(char_poly(companion(f)) == f);
    }
  }
  SUBCASE("zero matrix gives x^n") {
    CHECK(char_poly(MatF::zero(F2, 3, 3)) == Poly::monomial(F2, 1, 3));
  }
  SUBCASE("[[0,1],[1,1]] over GF(2) gives x^2+x+1") {
    MatF M(F2, 2, 2, {0, 1, 1, 1});
    CHECK(char_poly(M) == Poly(F2, {1, 1, 1}));
  }
  SUBCASE("similarity invariance and determinant-route agreement") {
    SplitMix64 g(23);
    for (std::uint64_t q : {2ull, 3ull, 4ull}) {
      auto F = Gf::from_order(q);
      for (int it = 0; it < 40; ++it) {
        const int n = 1 + static_cast<int>(g.below(4));
        MatF M = random_mat(F, n, n, g);
        MatF P = random_invertible(F, n, g);
        Poly cp = char_poly(M);
        CHECK(cp == char_poly(P * M * *inverse(P)));
        CHECK(cp == poly_det(linear_pencil(M)));  // independent determinant route
        CHECK(cp.is_monic());
        CHECK(cp.degree() == n);
      }
    }
  }
}

TEST_CASE("subspace enumeration") {
  auto F2 = Gf::make(2);
  SUBCASE("35 planes in F_2^4") {
    CHECK(subspaces(F2, 4, 2).size() == 35);
  }
  SUBCASE("trivial dimensions") {
    auto z = subspaces(F2, 3, 0);
    REQUIRE(z.size() == 1);
    CHECK(z[0].dim() == 0);
    auto full = subspaces(F2, 3, 3);
    REQUIRE(full.size() == 1);
    CHECK(full[0].basis == MatF::identity(F2, 3));
    CHECK_THROWS_AS(subspaces(F2, 2, 3), DomainError);
  }
  SUBCASE("count matches the Gaussian binomial for q <= 3, N <= 5") {
    for (std::uint64_t q : {2ull, 3ull}) {
      auto F = Gf::from_order(q);
      for (int N = 0; N <= 5; ++N)
        for (int m = 0; m <= N; ++m) {
          std::set<std::vector<Gf::El>> distinct;
          std::uint64_t count = 0;
          for_each_subspace(F, N, m, [&](const SubspaceBasis& W) {
            ++count;
            CHECK((m == 0 || in_rref(W.basis)));
            distinct.insert(W.basis.entries());
          });
          CHECK(Int(count) == gaussian_binomial(Int(q), N, m));
          CHECK(distinct.size() == count);  // no duplicates
        }
    }
  }
}
