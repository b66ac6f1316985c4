#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sevenfold/rational.hpp"

namespace sevenfold {

unsigned euler_phi(unsigned n);

/// Exponents e (0 <= e < n) whose powers ζₙ^e form the canonical
/// (Zumbroich) basis of Q(ζₙ), sorted ascending.
const std::vector<std::uint32_t>& basis_exponents(unsigned n);

/// Element of Q(ζₙ) stored as rational coordinates on the canonical basis.
/// Two elements of the same order are equal iff their term lists agree;
/// elements of different orders are compared after lifting to the lcm.
class Cyclotomic {
 public:
  using Term = std::pair<std::uint32_t, Rational>;

  Cyclotomic() = default;
  Cyclotomic(long v);  // NOLINT(google-explicit-constructor)
  Cyclotomic(const Integer& v);  // NOLINT(google-explicit-constructor)
  Cyclotomic(const Rational& v);  // NOLINT(google-explicit-constructor)

  /// Σ_e raw[e]·ζₙ^e for an arbitrary (non-canonical) coefficient vector of
  /// length n.
  static Cyclotomic from_exponents(unsigned n, std::span<const Rational> raw);
  /// Inverse of coordinates().
  static Cyclotomic from_coordinates(unsigned n, std::span<const Rational> coords);

  unsigned order() const noexcept { return order_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Dense coordinates on basis_exponents(order()).
  std::vector<Rational> coordinates() const;

  /// Same value viewed in Q(ζ_m); m must be a multiple of order().
  Cyclotomic lifted(unsigned m) const;
  /// Same value viewed in Q(ζ_m) when it lies in that field.
  std::optional<Cyclotomic> in_order(unsigned m) const;
  /// Same value in the smallest Q(ζ_d) containing it.
  Cyclotomic minimal() const;

  Cyclotomic conj() const;
  /// Automorphism ζ ↦ ζ^k; throws std::domain_error unless gcd(k, n) = 1.
  Cyclotomic galois(long k) const;
  /// Throws std::domain_error on zero.
  Cyclotomic inverse() const;

  std::optional<Rational> try_rational() const;
  std::optional<Integer> try_integer() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& b);
  Cyclotomic& operator-=(const Cyclotomic& b);
  Cyclotomic& operator*=(const Cyclotomic& b);
  Cyclotomic& operator/=(const Cyclotomic& b);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  /// GAP-style rendering of the minimal form, e.g. "-1-E(19)^2".
  std::string to_string() const;

  /// r·a, term by term.
  Cyclotomic scaled(const Rational& r) const;

 private:
  Cyclotomic(unsigned n, std::vector<Term> terms) : order_(n), terms_(std::move(terms)) {}

  unsigned order_ = 1;
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c);
std::string to_string(const Cyclotomic& c);

Cyclotomic zeta(unsigned n, long k = 1);
/// ξ^k with ξ = ζ₁₉.
Cyclotomic xi(long k = 1);
/// ν = Σ_{k=1}^{9} ξ^{k²} = (−1 + i√19)/2.
Cyclotomic gauss_nu();
/// 1 + 2ν = i√19.
Cyclotomic i_sqrt19();
/// ζ₉^k + ζ₉^{−k}.
Cyclotomic a_k(long k);
/// −(ζ₁₀^k + ζ₁₀^{−k}).
Cyclotomic b_k(long k);

/// Legendre symbol (a | p) for an odd prime p.
int legendre(long a, long p);

}  // namespace sevenfold
