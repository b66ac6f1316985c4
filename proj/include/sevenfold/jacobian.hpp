#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "sevenfold/characters.hpp"
#include "sevenfold/cyclotomic.hpp"
#include "sevenfold/matrix.hpp"

namespace sevenfold::jacobian {

constexpr unsigned kVars = 9;
using Exponents = std::array<std::uint8_t, kVars>;

/// Exponent vector of a product of variables given by 1-based index,
/// e.g. {1, 1, 6} for x₁²x₆.
Exponents monomial(std::initializer_list<unsigned> vars);

/// Sparse polynomial in x₁ … x₉ with cyclotomic coefficients; zero
/// coefficients are never stored.
class Poly9 {
 public:
  Poly9() = default;
  Poly9(const Cyclotomic& c);  // NOLINT(google-explicit-constructor)
  Poly9(const Exponents& e, const Cyclotomic& c = 1);
  /// x_j, 1-based.
  static Poly9 variable(unsigned j);

  const std::map<Exponents, Cyclotomic>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Cyclotomic coefficient(const Exponents& e) const;
  /// Common degree of all terms; nullopt for 0 or a non-homogeneous form.
  std::optional<unsigned> degree() const;
  bool has_rational_coefficients() const;
  Poly9 scaled(const Cyclotomic& c) const;

  Poly9& operator+=(const Poly9& b);
  Poly9& operator-=(const Poly9& b);
  friend Poly9 operator+(Poly9 a, const Poly9& b) { return a += b; }
  friend Poly9 operator-(Poly9 a, const Poly9& b) { return a -= b; }
  friend Poly9 operator*(const Poly9& a, const Poly9& b);
  friend bool operator==(const Poly9&, const Poly9&) = default;

  /// e.g. "x1^2*x6 + x6^2*x2 - 2*x1*x7*x8".
  std::string to_string() const;

 private:
  void add_term(const Exponents& e, const Cyclotomic& c);
  std::map<Exponents, Cyclotomic> terms_;
};

/// f_λ = x₁²x₆ + x₆²x₂ + x₂²x₇ + x₇²x₄ + x₄²x₅ + x₅²x₈ + x₈²x₉ + x₉²x₃ + x₃²x₁
///       + λ(x₁x₇x₈ + x₂x₃x₅ + x₄x₆x₉).
Poly9 pencil(const Rational& lambda);
/// f₋₂.
Poly9 adler_cubic();

/// ∂f/∂x_j, 1-based.
Poly9 partial(const Poly9& f, unsigned j);

/// (g·f)(x) = f(gᵀx): x_j ↦ Σ_k g_kj x_k, so the span of x₁ … x₉ carries
/// the matrices g themselves. Throws std::invalid_argument unless g is an
/// invertible 9×9 matrix.
Poly9 act(const Matrix<Cyclotomic>& g, const Poly9& f);
/// c with act(g, f) = c·f, if any.
std::optional<Cyclotomic> invariance_scalar(const Matrix<Cyclotomic>& g, const Poly9& f);

/// Monomials of degree d in 9 variables, lexicographically descending
/// (x₁^d first), with an index lookup. Cached per degree.
class MonomialBasis {
 public:
  static const MonomialBasis& of_degree(unsigned d);
  unsigned degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return monomials_.size(); }
  const Exponents& operator[](std::size_t i) const { return monomials_[i]; }
  /// Throws std::out_of_range for a monomial of another degree.
  std::size_t index(const Exponents& e) const;

 private:
  explicit MonomialBasis(unsigned d);
  unsigned degree_;
  std::vector<Exponents> monomials_;
  std::unordered_map<std::uint64_t, std::uint32_t> lookup_;
};

/// S_d, the span I_d of S_{d−2}·{∂_j f}, and R_d = S_d / I_d.
struct GradedSlice {
  unsigned degree = 0;
  std::size_t dim_s = 0;
  std::size_t spanning_rows = 0;
  std::size_t rank_i = 0;
  std::size_t dim_r = 0;
};

/// Exact rank over Q (rational f) or over the cyclotomic field.
GradedSlice graded_slice(const Poly9& f, unsigned d);
/// dim R_d; 0 for negative d.
std::size_t graded_dim(const Poly9& f, int d);
/// The same dimension with coefficients reduced modulo p. Cyclotomic
/// coefficients need their order to divide p − 1 (ζ_n ↦ g^{(p−1)/n} for the
/// least primitive root g). Since rank drops modulo p, the result bounds
/// the characteristic-zero dimension from above.
std::size_t graded_dim_mod_p(const Poly9& f, int d, std::uint32_t p);

/// Image of a cyclotomic number in F_p under the embedding described at
/// graded_dim_mod_p. Throws std::invalid_argument if p divides a
/// denominator or the order does not divide p − 1.
std::uint32_t reduce_mod_p(const Cyclotomic& c, std::uint32_t p);

/// h^{7−q,q} of the cubic sevenfold {f = 0}: dim R_{3(q+1)−9} for q ≤ 3 and
/// h^{q,7−q} (Hodge symmetry) for q ≥ 4. Throws std::invalid_argument for
/// q > 7.
std::size_t hodge_number(const Poly9& f, unsigned q);

/// Character of the span of the nine partials, per class of the chosen
/// group, using the certified 9×9 matrices. Throws std::domain_error unless
/// every class representative fixes f with scalar exactly 1.
characters::Character character_on_I2(const Poly9& f, psl2::GroupTag group);
/// trace(S₃) − trace(S₁)·trace(I₂) per class. Throws std::domain_error if
/// f is not invariant or dim I₃ ≠ 81.
characters::Character character_on_R3(const Poly9& f, psl2::GroupTag group);

enum class SmoothStatus { certified_smooth, inconclusive };

struct SmoothnessCertificate {
  SmoothStatus status = SmoothStatus::inconclusive;
  std::uint32_t prime = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t rank = 0;
  /// dim_{F_p} R₁₀.
  std::size_t dim_r10 = 0;
};

/// Rank modulo p of S₈·{∂_j f} inside S₁₀. R₁₀ = 0 means the partials have
/// no common zero over F̄_p, so {f = 0} is smooth over F_p and hence over Q.
/// Throws std::invalid_argument if p is not prime, divides a coefficient
/// denominator, or f does not have rational coefficients.
SmoothnessCertificate smooth_certificate_mod_p(const Poly9& f, std::uint32_t p);

std::string to_string(SmoothStatus s);

struct PencilRow {
  Rational lambda;
  std::vector<std::size_t> dims;  // dim R_0 … dim R_4
  std::vector<SmoothnessCertificate> certificates;  // empty unless heavy
  /// Every prime tried was inconclusive.
  bool suspected_singular = false;
};

/// Graded dimensions per λ; with heavy set, one smoothness certificate per
/// prime as well.
std::vector<PencilRow> pencil_scan(const std::vector<Rational>& lambdas, const std::vector<std::uint32_t>& primes,
                                   bool heavy);

}  // namespace sevenfold::jacobian
