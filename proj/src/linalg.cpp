#include "sevenfold/linalg.hpp"

#include <stdexcept>

namespace sevenfold {

RankKernel<Rational> rank_kernel(const Matrix<Rational>& m) {
  auto [im, scales] = integerize_rows(m);
  auto e = fraction_free_gauss_jordan(std::move(im));
  RankKernel<Rational> out;
  out.rank = e.rank();
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Integer> v(n);
    v[f] = e.scale;
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) v[e.pivot_cols[i]] = -e.reduced(i, f);
    Integer g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    std::vector<Rational> q(n);
    for (std::size_t j = 0; j < n; ++j) q[j] = Rational(v[j] / g);
    out.kernel.push_back(std::move(q));
  }
  return out;
}

RankKernel<Cyclotomic> rank_kernel(const Matrix<Cyclotomic>& m) {
  auto e = gauss_jordan(m);
  return {e.rank(), kernel_from_echelon(e)};
}

std::size_t rank(const Matrix<Rational>& m) {
  return fraction_free_gauss_jordan(integerize_rows(m).first).rank();
}

std::size_t rank(const Matrix<Integer>& m) { return fraction_free_gauss_jordan(m).rank(); }

HermiteForm hnf(const Matrix<Integer>& m, bool with_transform) {
  HermiteForm out;
  out.h = m;
  const std::size_t rows = m.rows(), cols = m.cols();
  if (with_transform) out.u = Matrix<Integer>::identity(rows);
  auto& h = out.h;
  auto& u = out.u;

  // new_r = s·row_r + t·row_i, new_i = x·row_r + y·row_i
  auto combine = [&](Matrix<Integer>& a, std::size_t r, std::size_t i, const Integer& s, const Integer& t,
                     const Integer& x, const Integer& y) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(r, j) == 0 && a(i, j) == 0) continue;
      Integer nr = s * a(r, j) + t * a(i, j);
      Integer ni = x * a(r, j) + y * a(i, j);
      a(r, j) = std::move(nr);
      a(i, j) = std::move(ni);
    }
  };
  auto sub_multiple = [](Matrix<Integer>& a, std::size_t i, std::size_t r, const Integer& q) {
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(r, j) != 0) a(i, j) -= q * a(r, j);
  };

  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (h(i, c) == 0) continue;
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), h(r, c).get_mpz_t(), h(i, c).get_mpz_t());
      const Integer x = -h(i, c) / g, y = h(r, c) / g;
      combine(h, r, i, s, t, x, y);
      if (with_transform) combine(u, r, i, s, t, x, y);
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      for (std::size_t j = 0; j < cols; ++j) h(r, j) = -h(r, j);
      if (with_transform)
        for (std::size_t j = 0; j < rows; ++j) u(r, j) = -u(r, j);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
      if (q == 0) continue;
      sub_multiple(h, i, r, q);
      if (with_transform) sub_multiple(u, i, r, q);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  return out;
}

Rational pfaffian(Matrix<Rational> a) {
  if (!a.is_square()) throw std::invalid_argument("pfaffian: matrix is not square");
  const std::size_t n = a.rows();
  if (n % 2) throw std::invalid_argument("pfaffian: odd dimension");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (a(i, j) != -a(j, i)) throw std::invalid_argument("pfaffian: matrix is not antisymmetric");

  auto swap_index = [&](std::size_t p, std::size_t q) {
    a.swap_rows(p, q);
    for (std::size_t i = 0; i < n; ++i) std::swap(a(i, p), a(i, q));
  };

  Rational pf = 1;
  for (std::size_t k = 0; k < n; k += 2) {
    std::size_t p = k + 1;
    while (p < n && a(k, p) == 0) ++p;
    if (p == n) return 0;
    if (p != k + 1) {
      swap_index(p, k + 1);
      pf = -pf;
    }
    const Rational piv = a(k, k + 1);
    pf *= piv;
    // Schur complement: a_ij += (a_{k+1,i}·a_{k,j} − a_{k,i}·a_{k+1,j}) / piv
    for (std::size_t i = k + 2; i < n; ++i) {
      const Rational c0i = a(k, i) / piv, c1i = a(k + 1, i) / piv;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (a(k, j) == 0 && a(k + 1, j) == 0) continue;
        a(i, j) += c1i * a(k, j) - c0i * a(k + 1, j);
        a(j, i) = -a(i, j);
      }
    }
  }
  return pf;
}

Integer determinant(const Matrix<Integer>& m) { return bareiss_determinant(m); }

Matrix<Cyclotomic> to_cyclotomic(const Matrix<Rational>& m) {
  return m.map([](const Rational& q) { return Cyclotomic(q); });
}

}  // namespace sevenfold
