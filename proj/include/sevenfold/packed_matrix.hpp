#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "sevenfold/cyclotomic.hpp"
#include "sevenfold/matrix.hpp"

namespace sevenfold {

/// Dense matrix over Q(ζ₁₉): one common positive denominator and, per entry,
/// 19 int64 numerators on the powers ζ^0 … ζ^18. In normal form slot 0 is
/// zero (so slots 1..18 are the canonical coordinates) and the content of
/// all numerators is coprime to the denominator. Arithmetic runs in 128-bit
/// and throws std::overflow_error if a normalized numerator leaves int64.
class PackedMatrix19 {
 public:
  static constexpr unsigned kOrder = 19;
  using Cell = std::array<std::int64_t, kOrder>;

  PackedMatrix19() = default;
  PackedMatrix19(std::size_t rows, std::size_t cols);

  static PackedMatrix19 identity(std::size_t n);
  /// Throws std::invalid_argument if an entry is not in Q(ζ₁₉).
  static PackedMatrix19 from_matrix(const Matrix<Cyclotomic>& m);
  Matrix<Cyclotomic> to_matrix() const;

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::int64_t denominator() const noexcept { return den_; }
  const Cell& cell(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c]; }

  Cyclotomic entry(std::size_t r, std::size_t c) const;
  Cyclotomic trace() const;
  bool is_identity() const;
  bool is_zero() const;
  /// Same shape and the same set of nonzero entries.
  bool same_support(const PackedMatrix19& other) const;

  PackedMatrix19 conj() const;
  PackedMatrix19 transposed() const;
  /// c·A; throws std::invalid_argument if c is not in Q(ζ₁₉).
  PackedMatrix19 scaled(const Cyclotomic& c) const;

  friend PackedMatrix19 operator+(const PackedMatrix19& a, const PackedMatrix19& b);

  friend PackedMatrix19 operator*(const PackedMatrix19& a, const PackedMatrix19& b);
  friend bool operator==(const PackedMatrix19& a, const PackedMatrix19& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.den_ == b.den_ && a.cells_ == b.cells_;
  }

  /// Builds a matrix from raw 128-bit numerators over `den`, normalizing.
  static PackedMatrix19 from_raw(std::size_t rows, std::size_t cols, std::vector<std::array<__int128, kOrder>> raw,
                                 __int128 den);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::int64_t den_ = 1;
  std::vector<Cell> cells_;
};

/// True iff a = c·b for some nonzero scalar c; the scalar is stored in
/// *scalar when requested.
bool projectively_equal(const Matrix<Cyclotomic>& a, const Matrix<Cyclotomic>& b, Cyclotomic* scalar = nullptr);

/// Sums Σ cᵢ·Aᵢ of packed matrices with integer weights over a fixed
/// denominator; each Aᵢ's denominator must divide it.
class PackedAccumulator19 {
 public:
  PackedAccumulator19(std::size_t rows, std::size_t cols, std::int64_t den);
  void add(const PackedMatrix19& m, std::int64_t weight = 1);
  /// Adds weight · (a ⊗ conj(b)), the Kronecker product with rows indexed by
  /// (i·b.rows + k) and columns by (j·b.cols + l).
  void add_kronecker_conj(const PackedMatrix19& a, const PackedMatrix19& b, std::int64_t weight = 1);
  PackedMatrix19 result() const;

 private:
  std::size_t rows_, cols_;
  std::int64_t den_;
  std::vector<std::array<__int128, PackedMatrix19::kOrder>> raw_;
};

}  // namespace sevenfold
