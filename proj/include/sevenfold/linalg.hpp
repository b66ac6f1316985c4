#pragma once

#include <cstddef>
#include <vector>

#include "sevenfold/cyclotomic.hpp"
#include "sevenfold/elimination.hpp"
#include "sevenfold/matrix.hpp"
#include "sevenfold/rational.hpp"

namespace sevenfold {

template <class F>
struct RankKernel {
  std::size_t rank = 0;
  std::vector<std::vector<F>> kernel;  // basis of {x : m·x = 0}
};

/// Fraction-free elimination on the row-integerized matrix; kernel vectors
/// are primitive integer vectors.
RankKernel<Rational> rank_kernel(const Matrix<Rational>& m);
/// Gauss-Jordan over Q(ζₙ).
RankKernel<Cyclotomic> rank_kernel(const Matrix<Cyclotomic>& m);

std::size_t rank(const Matrix<Rational>& m);
std::size_t rank(const Matrix<Integer>& m);

struct HermiteForm {
  Matrix<Integer> h;  // row Hermite normal form, zero rows last
  Matrix<Integer> u;  // unimodular, u·m = h (empty unless requested)
  std::vector<std::size_t> pivot_cols;
  std::size_t rank() const noexcept { return pivot_cols.size(); }
};

/// Row HNF: pivots positive, entries above a pivot reduced into [0, pivot).
HermiteForm hnf(const Matrix<Integer>& m, bool with_transform = true);

/// Pfaffian of an antisymmetric matrix of even size (Parlett-Reid style
/// 2×2 block elimination). Throws std::invalid_argument otherwise.
Rational pfaffian(Matrix<Rational> m);

Integer determinant(const Matrix<Integer>& m);

/// Entrywise embedding Q ⊂ Q(ζₙ).
Matrix<Cyclotomic> to_cyclotomic(const Matrix<Rational>& m);

}  // namespace sevenfold
