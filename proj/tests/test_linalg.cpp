#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <numeric>

#include "sevenfold/linalg.hpp"
#include "sevenfold/sparse_fp.hpp"
#include "support/generators.hpp"

using namespace sevenfold;
using sevenfold::oracle::Gen;

namespace {

// Oracles written independently of the library kernels.

Rational laplace_det(const Matrix<Rational>& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Rational d = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    Matrix<Rational> minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    const Rational term = m(0, j) * laplace_det(minor);
    d += (j % 2 == 0) ? term : Rational(-term);
  }
  return d;
}

// Bareiss determinant on a copy, written out here for the minor oracle.
Integer minor_det(std::vector<std::vector<Integer>> a) {
  const std::size_t n = a.size();
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<bool(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    if (f(idx)) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Largest k with a nonzero k×k minor.
std::size_t minor_rank(const Matrix<Integer>& m) {
  for (std::size_t k = std::min(m.rows(), m.cols()); k > 0; --k) {
    bool found = false;
    for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
      for_each_subset(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
        std::vector<std::vector<Integer>> a(k, std::vector<Integer>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) a[i][j] = m(rows[i], cols[j]);
        found = minor_det(a) != 0;
        return found;
      });
      return found;
    });
    if (found) return k;
  }
  return 0;
}

std::size_t naive_rank_fp(std::vector<std::vector<long long>> a, long long p) {
  std::size_t r = 0;
  const std::size_t n = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = r;
    while (piv < a.size() && ((a[piv][c] % p) + p) % p == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    long long inv = 1;
    const long long x = ((a[r][c] % p) + p) % p;
    while (x * inv % p != 1) ++inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r) continue;
      const long long f = (((a[i][c] % p) + p) % p) * inv % p;
      for (std::size_t j = 0; j < n; ++j) a[i][j] = ((a[i][j] - f * a[r][j]) % p + p) % p;
    }
    ++r;
  }
  return r;
}

Matrix<Rational> random_low_rank(Gen& g, std::size_t n, std::size_t r) {
  auto a = g.rational_matrix(n, r, 0.8, 5);
  auto b = g.rational_matrix(r, n, 0.8, 5);
  return a * b;
}

Matrix<Integer> random_unimodular(Gen& g, std::size_t n) {
  auto u = Matrix<Integer>::identity(n);
  for (int step = 0; step < 12; ++step) {
    const auto i = static_cast<std::size_t>(g.integer(0, static_cast<long>(n) - 1));
    const auto j = static_cast<std::size_t>(g.integer(0, static_cast<long>(n) - 1));
    if (i == j) continue;
    const long q = g.integer(-3, 3);
    for (std::size_t c = 0; c < n; ++c) u(i, c) += q * u(j, c);
  }
  return u;
}

Matrix<Rational> to_q(const Matrix<Integer>& m) {
  return m.map([](const Integer& z) { return Rational(z); });
}

}  // namespace

TEST(RankKernel, Identity) {
  auto r = rank_kernel(Matrix<Rational>::identity(3));
  EXPECT_EQ(r.rank, 3u);
  EXPECT_TRUE(r.kernel.empty());
}

TEST(RankKernel, KernelAnnihilates) {
  Gen g(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto r = static_cast<std::size_t>(g.integer(0, 6));
    auto m = random_low_rank(g, 7, r);
    auto rk = rank_kernel(m);
    EXPECT_EQ(rk.rank + rk.kernel.size(), m.cols());
    for (const auto& v : rk.kernel) {
      auto mv = m.apply(v);
      EXPECT_TRUE(std::all_of(mv.begin(), mv.end(), [](const Rational& q) { return q == 0; }));
    }
  }
}

TEST(RankKernel, AgreesWithMinorOracle) {
  Gen g(10);
  for (int trial = 0; trial < 8; ++trial) {
    const auto r = static_cast<std::size_t>(g.integer(1, 10));
    auto m = random_low_rank(g, 10, r);
    auto im = integerize_rows(m).first;
    EXPECT_EQ(rank_kernel(m).rank, minor_rank(im));
  }
}

TEST(RankKernel, TransposeInvariant) {
  Gen g(4);
  for (int trial = 0; trial < 20; ++trial) {
    auto m = g.rational_matrix(static_cast<std::size_t>(g.integer(1, 9)), static_cast<std::size_t>(g.integer(1, 9)), 0.3);
    EXPECT_EQ(rank(m), rank(m.transposed()));
  }
}

TEST(RankKernel, RationalRankDominatesModP) {
  Gen g(8);
  for (int trial = 0; trial < 20; ++trial) {
    auto m = g.integer_matrix(6, 7, 4);
    std::vector<std::vector<long long>> rows(6, std::vector<long long>(7));
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 7; ++j) rows[i][j] = m(i, j).get_si();
    for (long long p : {2LL, 3LL, 5LL, 7LL}) EXPECT_GE(rank(m), naive_rank_fp(rows, p));
  }
}

TEST(RankKernel, CyclotomicKernel) {
  Gen g(21);
  Matrix<Cyclotomic> m(4, 5);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 5; ++j) m(i, j) = g.cyclotomic(19, 0.3);
  for (std::size_t j = 0; j < 5; ++j) m(3, j) = gauss_nu() * m(0, j) - m(2, j);
  auto rk = rank_kernel(m);
  EXPECT_EQ(rk.rank, 3u);
  ASSERT_EQ(rk.kernel.size(), 2u);
  for (const auto& v : rk.kernel)
    for (const auto& x : m.apply(v)) EXPECT_TRUE(x.is_zero());
}

TEST(FieldElimination, InverseAndSolve) {
  Gen g(30);
  for (int trial = 0; trial < 10; ++trial) {
    auto m = g.rational_matrix(5, 5, 0.9);
    auto inv = inverse(m);
    if (laplace_det(m) == 0) {
      EXPECT_FALSE(inv);
      continue;
    }
    ASSERT_TRUE(inv);
    EXPECT_EQ(m * *inv, Matrix<Rational>::identity(5));
    std::vector<Rational> b{1, 2, 3, 4, 5};
    auto x = solve(m, b);
    ASSERT_TRUE(x);
    EXPECT_EQ(m.apply(*x), b);
  }
  EXPECT_FALSE(solve(Matrix<Rational>::from_rows({{1, 1}, {1, 1}}), {Rational(0), Rational(1)}));
}

TEST(Determinant, MatchesLaplace) {
  Gen g(31);
  for (int trial = 0; trial < 20; ++trial) {
    auto m = g.rational_matrix(6, 6, 0.6);
    EXPECT_EQ(determinant(m), laplace_det(m));
  }
}

TEST(Hnf, Identity) {
  auto h = hnf(Matrix<Integer>::identity(4));
  EXPECT_EQ(h.h, Matrix<Integer>::identity(4));
  EXPECT_EQ(h.u, Matrix<Integer>::identity(4));
}

TEST(Hnf, Diagonal) {
  auto m = Matrix<Integer>::from_rows({{2, 0}, {0, 3}});
  auto h = hnf(m);
  EXPECT_EQ(h.h, m);
  EXPECT_EQ(abs(determinant(h.h)), 6);
}

TEST(Hnf, PreservesDeterminantAndIsUnimodular) {
  Gen g(40);
  int full_rank = 0;
  for (int trial = 0; trial < 30; ++trial) {
    auto m = g.integer_matrix(6, 6, 7);
    const Rational d = laplace_det(to_q(m));
    if (d == 0) continue;
    ++full_rank;
    auto h = hnf(m);
    EXPECT_EQ(abs(laplace_det(to_q(h.h))), abs(d));
    EXPECT_EQ(h.u * m, h.h);
    EXPECT_EQ(abs(laplace_det(to_q(h.u))), 1);
    for (std::size_t i = 0; i < 6; ++i) {
      EXPECT_GT(h.h(i, i), 0);
      for (std::size_t r = 0; r < i; ++r) {
        EXPECT_GE(h.h(r, i), 0);
        EXPECT_LT(h.h(r, i), h.h(i, i));
      }
      for (std::size_t r = i + 1; r < 6; ++r) EXPECT_EQ(h.h(r, i), 0);
    }
  }
  EXPECT_GT(full_rank, 20);
}

TEST(Hnf, UniqueForSameLattice) {
  Gen g(41);
  for (int trial = 0; trial < 20; ++trial) {
    auto m = g.integer_matrix(4, 7, 9);
    auto u = random_unimodular(g, 4);
    EXPECT_EQ(hnf(m, false).h, hnf(u * m, false).h);
  }
}

TEST(Hnf, RankDeficientRowsGoLast) {
  auto m = Matrix<Integer>::from_rows({{2, 4, 6}, {1, 2, 3}, {0, 0, 5}});
  auto h = hnf(m);
  EXPECT_EQ(h.rank(), 2u);
  EXPECT_EQ(h.u * m, h.h);
  for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(h.h(2, j), 0);
}

TEST(Pfaffian, SmallCases) {
  EXPECT_EQ(pfaffian(Matrix<Rational>::from_rows({{0, 1}, {-1, 0}})), 1);
  Matrix<Rational> blocks(8, 8);
  for (std::size_t k = 0; k < 8; k += 2) {
    blocks(k, k + 1) = 1;
    blocks(k + 1, k) = -1;
  }
  EXPECT_EQ(pfaffian(blocks), 1);
  // pf = a01·a23 − a02·a13 + a03·a12
  auto m = Matrix<Rational>::from_rows({{0, 2, 3, 5}, {-2, 0, 7, 11}, {-3, -7, 0, 13}, {-5, -11, -13, 0}});
  EXPECT_EQ(pfaffian(m), Rational(2 * 13 - 3 * 11 + 5 * 7));
}

TEST(Pfaffian, Errors) {
  EXPECT_THROW(pfaffian(Matrix<Rational>(3, 3)), std::invalid_argument);
  EXPECT_THROW(pfaffian(Matrix<Rational>::from_rows({{0, 1}, {1, 0}})), std::invalid_argument);
  EXPECT_THROW(pfaffian(Matrix<Rational>::from_rows({{1, 1}, {-1, 0}})), std::invalid_argument);
}

TEST(PfaffianProperty, SquareIsDeterminant) {
  Gen g(50);
  for (int trial = 0; trial < 30; ++trial) {
    Matrix<Rational> m(8, 8);
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = i + 1; j < 8; ++j)
        if (g.coin(trial % 3 == 0 ? 0.3 : 0.8)) {
          m(i, j) = g.rational(9, 3);
          m(j, i) = -m(i, j);
        }
    const Rational pf = pfaffian(m);
    EXPECT_EQ(pf * pf, laplace_det(m));
  }
}

TEST(PfaffianProperty, IndexScaling) {
  Gen g(51);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 6;
    Matrix<Rational> form(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        form(i, j) = g.integer(-5, 5);
        form(j, i) = -form(i, j);
      }
    if (pfaffian(form) == 0) continue;
    auto basis = g.integer_matrix(n, n, 4);
    auto h = hnf(basis, false);
    if (h.rank() < n) continue;
    Integer index = 1;
    for (std::size_t i = 0; i < n; ++i) index *= h.h(i, i);
    auto b = to_q(basis);
    const Rational restricted = pfaffian(b * form * b.transposed());
    EXPECT_EQ(abs(restricted), abs(Rational(index) * pfaffian(form)));
  }
}

TEST(SparseRank, Identity) {
  SparseMatrixFp m(19, 100);
  for (std::uint32_t i = 0; i < 100; ++i) m.add_row({{i, 1}});
  EXPECT_EQ(sparse_rank_fp(m), 100u);
}

TEST(SparseRank, Zero) {
  SparseMatrixFp m(7, 30);
  for (int i = 0; i < 30; ++i) m.add_row({{static_cast<std::uint32_t>(i), 7}});
  EXPECT_EQ(m.nonzeros(), 0u);
  EXPECT_EQ(sparse_rank_fp(m), 0u);
}

TEST(SparseRank, RejectsComposite) { EXPECT_THROW(SparseMatrixFp(15, 3), std::invalid_argument); }

TEST(SparseRankProperty, MatchesDenseOracle) {
  Gen g(60);
  for (int trial = 0; trial < 40; ++trial) {
    const long p = trial % 2 ? 3 : 101;
    const auto r = static_cast<std::size_t>(g.integer(1, 50));
    const auto c = static_cast<std::size_t>(g.integer(1, 50));
    const double density = g.coin() ? 0.05 : 0.3;
    SparseMatrixFp m(static_cast<std::uint32_t>(p), c);
    std::vector<std::vector<long long>> dense(r, std::vector<long long>(c, 0));
    std::vector<std::vector<std::uint32_t>> dense_u(r, std::vector<std::uint32_t>(c, 0));
    for (std::size_t i = 0; i < r; ++i) {
      std::vector<std::pair<std::uint32_t, long long>> row;
      for (std::size_t j = 0; j < c; ++j)
        if (g.coin(density)) {
          const long v = g.integer(-50, 50);
          dense[i][j] = v;
          dense_u[i][j] = mod_p(v, static_cast<std::uint32_t>(p));
          row.emplace_back(static_cast<std::uint32_t>(j), v);
        }
      // duplicate the previous row combination sometimes
      if (i > 0 && g.coin(0.2)) {
        row.clear();
        for (std::size_t j = 0; j < c; ++j) {
          dense[i][j] = 2 * dense[i - 1][j];
          dense_u[i][j] = mod_p(dense[i][j], static_cast<std::uint32_t>(p));
          if (dense[i][j]) row.emplace_back(static_cast<std::uint32_t>(j), dense[i][j]);
        }
      }
      m.add_row(row);
    }
    const auto expected = naive_rank_fp(dense, p);
    EXPECT_EQ(sparse_rank_fp(m), expected);
    EXPECT_EQ(dense_rank_fp(dense_u, static_cast<std::uint32_t>(p)), expected);
  }
}

TEST(DenseEchelon, FreeColumnsAndReduction) {
  DenseEchelonFp e(5, 4);
  EXPECT_TRUE(e.insert({1, 2, 0, 0}));
  EXPECT_TRUE(e.insert({0, 1, 1, 0}));
  EXPECT_FALSE(e.insert({1, 3, 1, 0}));
  EXPECT_EQ(e.rank(), 2u);
  EXPECT_EQ(e.free_cols(), (std::vector<std::size_t>{2, 3}));
  std::vector<std::uint32_t> v{0, 1, 0, 0};
  e.reduce(v);
  EXPECT_EQ(v, (std::vector<std::uint32_t>{0, 0, 4, 0}));
}
