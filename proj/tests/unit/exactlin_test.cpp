#include <gtest/gtest.h>

#include <random>
#include <set>

#include "fundseq/exactlin.hpp"

using namespace fundseq;

namespace {

IntMat random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  IntMat m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

// Determinant by cofactor expansion; fine for the tiny sizes used here.
Int det(const IntMat& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  Int total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::size_t> rows, cols;
    for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
    for (std::size_t k = 0; k < n; ++k)
      if (k != j) cols.push_back(k);
    Int minor = det(a.select_rows(rows).select_cols(cols));
    total += (j % 2 ? -1 : 1) * a(0, j) * minor;
  }
  return total;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Invariant factors from determinantal divisors: d_k = D_k / D_{k-1}.
std::vector<Int> determinantal_invariants(const IntMat& a) {
  std::vector<Int> out;
  Int prev = 1;
  for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(a.rows(), k, 0, cur, rs);
    subsets(a.cols(), k, 0, cur, cs);
    Int D = 0;
    for (auto& r : rs)
      for (auto& c : cs) D = gcd(D, det(a.select_rows(r).select_cols(c)));
    if (D == 0) break;
    out.push_back(D / prev);
    prev = D;
  }
  return out;
}

}  // namespace

TEST(Snf, WorkedExample) {
  auto r = snf(IntMat::from_rows({{2, 4}, {6, 8}}));
  EXPECT_EQ(r.S, IntMat::from_rows({{2, 0}, {0, 4}}));
  EXPECT_EQ(r.U * IntMat::from_rows({{2, 4}, {6, 8}}) * r.V, r.S);
}

TEST(Snf, EmptyAndZero) {
  auto r = snf(IntMat(0, 3));
  EXPECT_EQ(r.S.rows(), 0u);
  auto z = snf(IntMat(2, 2));
  EXPECT_TRUE(z.S.is_zero());
}

TEST(Snf, PropertyFactorisationAndDivisibility) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t r = rng() % 5, c = rng() % 5;
    IntMat A = random_matrix(rng, r, c, 9);
    auto res = snf(A);
    ASSERT_EQ(res.U * A * res.V, res.S);
    ASSERT_EQ(res.U * res.Uinv, IntMat::identity(r));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j) ASSERT_EQ(res.S(i, j), 0);
    auto d = res.diagonal();
    for (std::size_t k = 0; k + 1 < d.size(); ++k) {
      ASSERT_GE(d[k], 0);
      if (d[k] == 0)
        ASSERT_EQ(d[k + 1], 0);
      else
        ASSERT_TRUE(mpz_divisible_p(d[k + 1].get_mpz_t(), d[k].get_mpz_t()));
    }
  }
}

TEST(Snf, MatchesDeterminantalDivisors) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    IntMat A = random_matrix(rng, r, c, 6);
    auto d = snf(A).diagonal();
    auto expected = determinantal_invariants(A);
    std::vector<Int> nonzero;
    for (auto& x : d)
      if (x != 0) nonzero.push_back(x);
    ASSERT_EQ(nonzero, expected) << A.to_string();
  }
}

TEST(Snf, ModularUnitsNormalised) {
  RingDesc R = RingDesc::mod(12);
  IntMat A = IntMat::from_rows({{5, 0}, {0, 8}});
  auto r = snf(A, R);
  EXPECT_EQ((r.U * A * r.V).mod(12), r.S);
  EXPECT_EQ(r.S(0, 0), 1);
  EXPECT_EQ(r.S(1, 1), 4);
}

TEST(KernelBasis, OverZ) {
  IntMat A = IntMat::from_rows({{1, 2, 3}, {2, 4, 6}});
  IntMat K = kernel_basis(A);
  EXPECT_EQ(K.cols(), 2u);
  EXPECT_TRUE((A * K).is_zero());
}

TEST(KernelBasis, OverZmod4WorkedExample) {
  IntMat K = kernel_basis(IntMat::from_rows({{2}}), RingDesc::mod(4));
  EXPECT_EQ(K, IntMat::from_rows({{2}}));
}

TEST(KernelBasis, PropertyModularCompleteness) {
  // Brute force: the kernel generated by the basis equals the full solution set.
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    long n = 2 + rng() % 7;
    RingDesc R = RingDesc::mod(n);
    std::size_t r = 1 + rng() % 2, c = 1 + rng() % 3;
    IntMat A = random_matrix(rng, r, c, 8).mod(n);
    IntMat K = kernel_basis(A, R);
    ASSERT_TRUE((A * K).mod(n).is_zero());
    std::set<std::vector<long>> brute, spanned;
    std::vector<long> x(c, 0);
    for (long code = 0; code < [&] { long p = 1; for (std::size_t i = 0; i < c; ++i) p *= n; return p; }(); ++code) {
      long t = code;
      IntMat v(c, 1);
      for (std::size_t i = 0; i < c; ++i) {
        x[i] = t % n;
        t /= n;
        v(i, 0) = x[i];
      }
      if ((A * v).mod(n).is_zero()) brute.insert(x);
    }
    // closure of K's columns under addition
    std::vector<std::vector<long>> frontier{std::vector<long>(c, 0)};
    spanned.insert(frontier[0]);
    while (!frontier.empty()) {
      auto cur = frontier.back();
      frontier.pop_back();
      for (std::size_t j = 0; j < K.cols(); ++j) {
        auto nxt = cur;
        for (std::size_t i = 0; i < c; ++i) nxt[i] = (nxt[i] + K(i, j).get_si()) % n;
        if (spanned.insert(nxt).second) frontier.push_back(nxt);
      }
    }
    ASSERT_EQ(brute, spanned);
  }
}

TEST(Solve, WorkedExampleMod5) {
  auto x = solve(IntMat::from_rows({{2}}), IntMat::from_rows({{3}}), RingDesc::mod(5));
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)(0, 0), 4);
}

TEST(Solve, InconsistentOverZ) {
  EXPECT_FALSE(solve(IntMat::from_rows({{2}}), IntMat::from_rows({{3}})));
}

TEST(Solve, DimensionMismatch) {
  EXPECT_THROW(solve(IntMat::from_rows({{2}}), IntMat(2, 1)), Error);
}

TEST(Solve, PropertyRoundTrip) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    IntMat A = random_matrix(rng, r, c, 7);
    IntMat x0 = random_matrix(rng, c, 1, 5);
    IntMat b = A * x0;
    auto x = solve(A, b);
    ASSERT_TRUE(x);
    ASSERT_EQ(A * *x, b);
  }
}

TEST(InvariantDivisors, WorkedExample) {
  auto inv = invariant_divisors(IntMat::from_rows({{2, 0}, {0, 3}}));
  EXPECT_EQ(inv.divisors, std::vector<Int>{6});
  EXPECT_EQ(inv.free_rank, 0u);
}

TEST(InvariantDivisors, FreeRankAndModular) {
  auto inv = invariant_divisors(IntMat::from_rows({{2}, {0}}));
  EXPECT_EQ(inv.divisors, std::vector<Int>{2});
  EXPECT_EQ(inv.free_rank, 1u);
  auto m = invariant_divisors(IntMat::from_rows({{2}}), RingDesc::mod(4));
  EXPECT_EQ(m.divisors, std::vector<Int>{2});
  EXPECT_EQ(m.free_rank, 0u);
  auto f = invariant_divisors(IntMat(2, 0), RingDesc::mod(6));
  EXPECT_TRUE(f.divisors.empty());
  EXPECT_EQ(f.free_rank, 2u);
}

TEST(Echelon, ReduceIsCanonical) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t r = 1 + rng() % 3, c = rng() % 4;
    IntMat A = random_matrix(rng, r, c, 6);
    Echelon e(A);
    IntMat v = random_matrix(rng, r, 1, 20);
    IntMat w = v + A * random_matrix(rng, c, 1, 4);
    ASSERT_EQ(e.reduce(v), e.reduce(w));
  }
}
