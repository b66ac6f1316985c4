#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace sevenfold {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in lowest terms. Throws std::domain_error when den == 0.
Rational make_rational(const Integer& num, const Integer& den = 1);

/// Parses "n", "-n" or "n/d". Throws std::invalid_argument on malformed text.
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

inline std::optional<long> to_long(const Integer& z) {
  if (!z.fits_slong_p()) return std::nullopt;
  return z.get_si();
}

Integer binomial(unsigned long n, unsigned long k);
Integer ipow(const Integer& base, unsigned long e);

}  // namespace sevenfold
