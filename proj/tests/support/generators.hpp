#pragma once

// Seeded random inputs for property tests.

#include <cstdint>
#include <random>
#include <vector>

#include "sevenfold/cyclotomic.hpp"
#include "sevenfold/matrix.hpp"

namespace sevenfold::oracle {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  Rational rational(long bound = 20, long den_bound = 6) {
    return make_rational(integer(-bound, bound), integer(1, den_bound));
  }

  /// Raw coefficient vector of length n with roughly `density` nonzeros.
  std::vector<Rational> raw_exponents(unsigned n, double density = 0.4) {
    std::vector<Rational> raw(n);
    for (auto& c : raw)
      if (coin(density)) c = rational();
    return raw;
  }

  Cyclotomic cyclotomic(unsigned n, double density = 0.4) {
    auto raw = raw_exponents(n, density);
    return Cyclotomic::from_exponents(n, raw);
  }

  Cyclotomic nonzero_cyclotomic(unsigned n) {
    for (;;) {
      auto c = cyclotomic(n);
      if (!c.is_zero()) return c;
    }
  }

  Matrix<Rational> rational_matrix(std::size_t r, std::size_t c, double density = 0.7, long bound = 9) {
    Matrix<Rational> m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (coin(density)) m(i, j) = rational(bound, 4);
    return m;
  }

  Matrix<Integer> integer_matrix(std::size_t r, std::size_t c, long bound = 9) {
    Matrix<Integer> m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = integer(-bound, bound);
    return m;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace sevenfold::oracle
