#include "sevenfold/sparse_fp.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace sevenfold {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw std::domain_error("inverse of zero mod p");
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

SparseMatrixFp::SparseMatrixFp(std::uint32_t p, std::size_t cols) : p_(p), cols_(cols) {
  if (p >= (1u << 31) || !is_prime(p)) throw std::invalid_argument("modulus must be a prime below 2^31");
}

void SparseMatrixFp::add_row(std::vector<std::pair<std::uint32_t, long long>> entries) {
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Entry> row;
  for (std::size_t i = 0; i < entries.size();) {
    const std::uint32_t c = entries[i].first;
    if (c >= cols_) throw std::out_of_range("sparse row column out of range");
    long long sum = 0;
    for (; i < entries.size() && entries[i].first == c; ++i) sum = (sum + mod_p(entries[i].second, p_)) % p_;
    if (sum != 0) row.emplace_back(c, static_cast<std::uint32_t>(sum));
  }
  rows_.push_back(std::move(row));
}

std::size_t SparseMatrixFp::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

std::size_t sparse_rank_fp(const SparseMatrixFp& m) {
  const std::uint64_t p = m.modulus();
  const std::size_t n = m.cols();
  std::vector<std::size_t> order(m.rows());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return m.row(a).size() < m.row(b).size();
  });

  // pivot rows are normalized to leading coefficient 1
  std::vector<std::vector<SparseMatrixFp::Entry>> pivot_row(n);
  std::vector<char> has_pivot(n, 0);
  std::vector<std::uint64_t> acc(n, 0);
  std::vector<char> queued(n, 0);
  std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> heap;
  std::size_t rank = 0;

  for (std::size_t idx : order) {
    const auto& src = m.row(idx);
    if (src.empty()) continue;
    for (auto [c, v] : src) {
      acc[c] = v;
      queued[c] = 1;
      heap.push(c);
    }
    while (!heap.empty()) {
      const std::uint32_t c = heap.top();
      heap.pop();
      queued[c] = 0;
      if (acc[c] == 0) continue;
      if (!has_pivot[c]) {
        // new pivot: collect the remainder
        std::vector<SparseMatrixFp::Entry> row;
        const std::uint64_t inv = inverse_mod(static_cast<std::uint32_t>(acc[c]), static_cast<std::uint32_t>(p));
        row.emplace_back(c, 1u);
        acc[c] = 0;
        std::vector<std::uint32_t> rest;
        while (!heap.empty()) {
          const std::uint32_t d = heap.top();
          heap.pop();
          queued[d] = 0;
          if (acc[d] != 0) rest.push_back(d);
        }
        for (auto d : rest) {
          row.emplace_back(d, static_cast<std::uint32_t>(acc[d] * inv % p));
          acc[d] = 0;
        }
        pivot_row[c] = std::move(row);
        has_pivot[c] = 1;
        ++rank;
        break;
      }
      const std::uint64_t f = p - acc[c];
      for (auto [d, v] : pivot_row[c]) {
        acc[d] = (acc[d] + f * v) % p;
        if (!queued[d] && acc[d] != 0) {
          queued[d] = 1;
          heap.push(d);
        }
      }
    }
  }
  return rank;
}

DenseEchelonFp::DenseEchelonFp(std::uint32_t p, std::size_t cols) : p_(p), cols_(cols), pivot_row_of_col_(cols, -1) {
  if (!is_prime(p) || p >= (1u << 31)) throw std::invalid_argument("modulus must be a prime below 2^31");
}

void DenseEchelonFp::reduce(std::vector<std::uint32_t>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("DenseEchelonFp: width mismatch");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t c = pivots_[r];
    if (v[c] == 0) continue;
    const std::uint64_t f = p_ - v[c];
    const auto& row = rows_[r];
    for (std::size_t j = 0; j < cols_; ++j)
      if (row[j]) v[j] = static_cast<std::uint32_t>((v[j] + f * row[j]) % p_);
  }
}

bool DenseEchelonFp::insert(std::vector<std::uint32_t> v) {
  reduce(v);
  std::size_t c = 0;
  while (c < cols_ && v[c] == 0) ++c;
  if (c == cols_) return false;
  const std::uint64_t inv = inverse_mod(v[c], p_);
  for (auto& x : v) x = static_cast<std::uint32_t>(x * inv % p_);
  // keep the stored rows fully reduced
  for (auto& row : rows_) {
    if (row[c] == 0) continue;
    const std::uint64_t f = p_ - row[c];
    for (std::size_t j = 0; j < cols_; ++j)
      if (v[j]) row[j] = static_cast<std::uint32_t>((row[j] + f * v[j]) % p_);
  }
  pivot_row_of_col_[c] = static_cast<long>(rows_.size());
  rows_.push_back(std::move(v));
  pivots_.push_back(c);
  return true;
}

std::vector<std::size_t> DenseEchelonFp::free_cols() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < cols_; ++c)
    if (pivot_row_of_col_[c] < 0) out.push_back(c);
  return out;
}

std::size_t dense_rank_fp(std::vector<std::vector<std::uint32_t>> rows, std::uint32_t p) {
  if (rows.empty()) return 0;
  const std::size_t n = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    const std::uint64_t inv = inverse_mod(rows[r][c], p);
    for (auto& x : rows[r]) x = static_cast<std::uint32_t>(x * inv % p);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const std::uint64_t f = p - rows[i][c];
      for (std::size_t j = c; j < n; ++j)
        rows[i][j] = static_cast<std::uint32_t>((rows[i][j] + f * rows[r][j]) % p);
    }
    ++r;
  }
  return r;
}

}  // namespace sevenfold
