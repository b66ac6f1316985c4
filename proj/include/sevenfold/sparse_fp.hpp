#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace sevenfold {

bool is_prime(std::uint64_t n);

/// a^{-1} mod p for a prime p and a ≢ 0.
std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);

/// Reduces an arbitrary integer into [0, p).
inline std::uint32_t mod_p(long long v, std::uint32_t p) {
  long long r = v % static_cast<long long>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

/// Row-sparse matrix over F_p; every stored value lies in [1, p−1].
class SparseMatrixFp {
 public:
  using Entry = std::pair<std::uint32_t, std::uint32_t>;  // (column, value)

  /// Throws std::invalid_argument unless p is a prime below 2³¹.
  SparseMatrixFp(std::uint32_t p, std::size_t cols);

  /// Adds a row from (column, value) pairs in any order; duplicate columns
  /// are summed and zero results dropped.
  void add_row(std::vector<std::pair<std::uint32_t, long long>> entries);

  std::uint32_t modulus() const noexcept { return p_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t rows() const noexcept { return rows_.size(); }
  const std::vector<Entry>& row(std::size_t i) const { return rows_[i]; }
  std::size_t nonzeros() const;

 private:
  std::uint32_t p_;
  std::size_t cols_;
  std::vector<std::vector<Entry>> rows_;
};

/// Rank over F_p by sparse semi-echelon elimination. Rows are taken
/// shortest first and each new pivot row is stored without back
/// substitution, which keeps fill-in low on Macaulay-type matrices.
std::size_t sparse_rank_fp(const SparseMatrixFp& m);

/// Dense reduced row echelon form over F_p, grown one row at a time.
class DenseEchelonFp {
 public:
  DenseEchelonFp(std::uint32_t p, std::size_t cols);

  /// Reduces v in place against the stored rows (full reduction).
  void reduce(std::vector<std::uint32_t>& v) const;
  /// Reduces v and keeps it as a new row when nonzero; returns true if the
  /// rank grew.
  bool insert(std::vector<std::uint32_t> v);

  std::size_t rank() const noexcept { return pivots_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  const std::vector<std::size_t>& pivot_cols() const noexcept { return pivots_; }
  /// Columns without a pivot, ascending.
  std::vector<std::size_t> free_cols() const;

 private:
  std::uint32_t p_;
  std::size_t cols_;
  std::vector<std::vector<std::uint32_t>> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<long> pivot_row_of_col_;
};

std::size_t dense_rank_fp(std::vector<std::vector<std::uint32_t>> rows, std::uint32_t p);

}  // namespace sevenfold
