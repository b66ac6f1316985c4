#pragma once

// Header-only elimination kernels. The field versions work for any exact
// scalar with +, -, *, / and a default value of zero; the fraction-free
// versions keep every intermediate entry an integer minor of the input.

#include <optional>
#include <vector>

#include "sevenfold/matrix.hpp"
#include "sevenfold/rational.hpp"

namespace sevenfold {

template <class F>
struct Echelon {
  Matrix<F> reduced;  // reduced row echelon form (zero rows at the bottom)
  std::vector<std::size_t> pivot_cols;
  std::size_t rank() const noexcept { return pivot_cols.size(); }
};

template <class F>
Echelon<F> gauss_jordan(Matrix<F> m) {
  const F zero{};
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == zero) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    const F inv = F(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j)
      if (!(m(r, j) == zero)) m(r, j) = m(r, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == zero) continue;
      const F factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!(m(r, j) == zero)) m(i, j) = m(i, j) - factor * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

/// Basis of the right kernel read off a reduced row echelon form.
template <class F>
std::vector<std::vector<F>> kernel_from_echelon(const Echelon<F>& e) {
  const std::size_t n = e.reduced.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<F> v(n);
    v[f] = F(1);
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) v[e.pivot_cols[i]] = F() - e.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solves a·x = b; nullopt when inconsistent. Returns one solution (free
/// variables set to zero).
template <class F>
std::optional<std::vector<F>> solve(const Matrix<F>& a, const std::vector<F>& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: shape mismatch");
  Matrix<F> aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  auto e = gauss_jordan(std::move(aug));
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == a.cols()) return std::nullopt;
  std::vector<F> x(a.cols());
  for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) x[e.pivot_cols[i]] = e.reduced(i, a.cols());
  return x;
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& a) {
  if (!a.is_square()) throw std::invalid_argument("inverse: non-square matrix");
  const std::size_t n = a.rows();
  Matrix<F> aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n + r) = F(1);
  }
  auto e = gauss_jordan(std::move(aug));
  if (e.rank() < n || e.pivot_cols[n - 1] != n - 1) return std::nullopt;
  Matrix<F> inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

/// Fraction-free Gauss-Jordan over Z. On return every pivot entry equals
/// `scale` and each pivot column is zero elsewhere.
struct FractionFreeEchelon {
  Matrix<Integer> reduced;
  std::vector<std::size_t> pivot_cols;
  Integer scale = 1;
  std::size_t rank() const noexcept { return pivot_cols.size(); }
};

inline FractionFreeEchelon fraction_free_gauss_jordan(Matrix<Integer> m) {
  Integer prev = 1;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  Integer t;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    const Integer piv = m(r, c);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      const Integer f = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (j == c) continue;
        Integer& x = m(i, j);
        if (f == 0) {
          if (x == 0) continue;
          x *= piv;
        } else {
          t = f * m(r, j);
          x *= piv;
          x -= t;
        }
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, c) = 0;
    }
    prev = piv;
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots), prev};
}

/// Bareiss determinant of a square integer matrix.
inline Integer bareiss_determinant(Matrix<Integer> m) {
  if (!m.is_square()) throw std::invalid_argument("determinant: non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(p, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer& x = m(i, j);
        x = m(k, k) * x - m(i, k) * m(k, j);
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// Clears denominators row by row; returns the integer matrix and the
/// per-row multipliers.
inline std::pair<Matrix<Integer>, std::vector<Integer>> integerize_rows(const Matrix<Rational>& m) {
  Matrix<Integer> out(m.rows(), m.cols());
  std::vector<Integer> scales(m.rows(), 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).get_num() * (l / m(r, c).get_den());
    scales[r] = l;
  }
  return {std::move(out), std::move(scales)};
}

inline Rational determinant(const Matrix<Rational>& m) {
  auto [im, scales] = integerize_rows(m);
  Rational d(bareiss_determinant(std::move(im)));
  for (const auto& s : scales) d /= s;
  d.canonicalize();
  return d;
}

}  // namespace sevenfold
