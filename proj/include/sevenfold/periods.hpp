#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sevenfold/cyclotomic.hpp"
#include "sevenfold/linalg.hpp"
#include "sevenfold/matrix.hpp"

namespace sevenfold::periods {

/// Vector of V = Q(ζ₁₉)⁹ on the basis e₁ … e₉ (index 0 ↔ e₁).
class PeriodVector {
 public:
  PeriodVector();
  explicit PeriodVector(std::array<Cyclotomic, 9> coords);

  const Cyclotomic& operator[](std::size_t i) const { return c_[i]; }
  Cyclotomic& operator[](std::size_t i) { return c_[i]; }

  PeriodVector scaled(const Cyclotomic& s) const;
  PeriodVector& operator+=(const PeriodVector& b);
  PeriodVector& operator-=(const PeriodVector& b);
  friend PeriodVector operator+(PeriodVector a, const PeriodVector& b) { return a += b; }
  friend PeriodVector operator-(PeriodVector a, const PeriodVector& b) { return a -= b; }
  friend bool operator==(const PeriodVector& a, const PeriodVector& b);

  /// 162 rational coordinates: 18 per entry on the basis of Q(ζ₁₉).
  std::vector<Rational> rational_coordinates() const;
  static PeriodVector from_rational_coordinates(const std::vector<Rational>& q);

  std::string to_string() const;

 private:
  std::array<Cyclotomic, 9> c_;
};

std::ostream& operator<<(std::ostream& os, const PeriodVector& v);

/// g·z for a 9×9 matrix acting on column vectors.
PeriodVector apply(const Matrix<Cyclotomic>& g, const PeriodVector& z);

/// ν = Σ_{k=1}^{9} ξ^{k²} and 1 + 2ν (= i√19).
Cyclotomic nu();
Cyclotomic one_plus_two_nu();

/// v_k = τ^k(e₁ + ⋯ + e₉).
PeriodVector build_v(long k);
/// w′_k = (v_k − 5v_{k+1} + 10v_{k+2} − 10v_{k+3} + 5v_{k+4} − v_{k+5}) / (1+2ν).
PeriodVector build_wprime(long k);
/// ℓ_k(z) = Σ_j ξ^{k j²} z_j.
Cyclotomic ell(long k, const PeriodVector& z);

/// a + bν with a, b ∈ Z, if c lies in Z[ν].
std::optional<std::pair<Integer, Integer>> in_z_nu(const Cyclotomic& c);
/// Z[ν] → Z[ν]/(1+2ν) = F₁₉, ν ↦ 9. Throws std::domain_error off Z[ν].
unsigned reduce_f19(const Cyclotomic& c);

/// Full-rank Z-lattice inside Q¹⁶², kept as hnf / denominator with a
/// positive integer denominator and the row HNF of the integral scaling.
class PeriodLattice {
 public:
  /// Z-span of the generators. Throws std::invalid_argument unless the
  /// span has rank 18.
  explicit PeriodLattice(const std::vector<PeriodVector>& generators, bool z_nu_module = false);

  const std::vector<PeriodVector>& generators() const noexcept { return generators_; }
  const Matrix<Integer>& hnf() const noexcept { return hnf_; }
  const Integer& denominator() const noexcept { return den_; }
  std::size_t rank() const noexcept { return hnf_.rows(); }
  /// Set by constructors that generate over Z[ν]; checked by the tests, not
  /// by this class.
  bool flagged_z_nu_module() const noexcept { return z_nu_; }

  /// Z-basis read off the HNF rows.
  std::vector<PeriodVector> basis() const;
  bool contains(const PeriodVector& z) const;
  bool contains(const PeriodLattice& other) const;
  /// covolume ratio [this : sub]; throws std::invalid_argument unless sub ⊆ this.
  Integer index_of(const PeriodLattice& sub) const;
  /// ν·L ⊆ L.
  bool nu_stable() const;

  friend bool operator==(const PeriodLattice& a, const PeriodLattice& b);

 private:
  std::vector<PeriodVector> generators_;
  Matrix<Integer> hnf_;
  std::vector<std::size_t> pivots_;
  Integer den_;
  bool z_nu_ = false;
};

/// Z-span of {v_k, νv_k : 0 ≤ k ≤ 8}.
PeriodLattice lattice_lambda0();
/// Z[ν]-span of (v_k − v_{k+1})/(1+2ν), 0 ≤ k ≤ 7, and v₀. Throws
/// std::logic_error if a generator has some ℓ_m outside Z[ν] or the index
/// over Λ₀ is not 19⁸.
PeriodLattice lattice_lambda8();
/// Z-span of Λ₀ and lifts of w₁ … w_j. Throws std::invalid_argument for j > 8.
PeriodLattice lattice_lambda(unsigned j);
/// Z[ν]w′₀ + ⋯ + Z[ν]w′₃ + Z[ν]v₄ + ⋯ + Z[ν]v₈.
PeriodLattice explicit_basis_lattice();

using F19Vector = std::array<unsigned, 8>;
using F19Matrix = std::array<std::array<unsigned, 8>, 8>;

/// Coordinates of z ∈ Λ₈ on t₁ … t₈ in Λ₈/Λ₀. Throws std::domain_error if
/// z ∉ Λ₈.
F19Vector quotient_coordinates(const PeriodVector& z);
/// A lift to Λ₈ of Σ c_i t_i.
PeriodVector lift(const F19Vector& t_coords);

struct FlagQuotient {
  std::vector<PeriodVector> t_lifts;  // (v_{i−1} − v_i)/(1+2ν), i = 1..8
  std::vector<F19Vector> w;  // w₁ … w₈ on the t-basis
  F19Matrix tau_hat_t;  // τ̂ on the t-basis, columns are images
  F19Matrix tau_hat_w;  // τ̂ on the w-basis
  bool single_jordan_block = false;
  /// τ̂-stable subspaces found by enumeration, each as a reduced echelon
  /// basis over the w-coordinates, sorted by dimension.
  std::vector<std::vector<F19Vector>> stable_subspaces;
  bool stable_subspaces_are_flag = false;
};

FlagQuotient flag_quotient();

/// Every A-stable subspace of F₁₉⁸, grown one dimension at a time through
/// eigenlines on the quotient. Complete whenever every stable subspace has
/// a stable hyperplane, e.g. when the characteristic polynomial splits.
/// Throws std::runtime_error if an eigenspace on a quotient exceeds
/// dimension 4.
std::vector<std::vector<F19Vector>> stable_subspaces(const F19Matrix& a);

/// E(x, y) = a·(s − s̄)/(1+2ν) with s = Σ x_k·conj(y_k). Throws
/// std::domain_error if the value is not rational.
Rational polarization_eval(const PeriodVector& x, const PeriodVector& y, const Rational& a = 1);

struct GramData {
  Matrix<Rational> gram;
  bool integral = false;
  Rational pfaffian_abs;
  Rational pfaffian_sq;
};

GramData gram_data(const PeriodLattice& lattice, const Rational& a = 1);
/// |Pf| of the Gram matrix of E on the HNF basis.
Rational gram_pfaffian(const PeriodLattice& lattice, const Rational& a = 1);

/// g·L = L.
bool stability(const Matrix<Cyclotomic>& g, const PeriodLattice& lattice);
/// gᵀḡ = 1.
bool unitarity(const Matrix<Cyclotomic>& g);
/// E(g b_i, g b_j) = E(b_i, b_j) on all pairs of the given basis.
bool preserves_form(const Matrix<Cyclotomic>& g, const std::vector<PeriodVector>& basis);

struct QEndomorphism {
  Matrix<Cyclotomic> q;  // Σ_{j=0}^{8} σ^j
  bool equals_outer_product = false;  // q = v₀·ℓ₀
  std::size_t rank = 0;
  Cyclotomic nu_value;  // ℓ₀(τv₀)
  bool acts_by_nu = false;  // q·τ·v₀ = ν·v₀
  bool passed() const;
};

QEndomorphism q_endomorphism_check();

/// One printed normalization of c₁(Θ) tried on Λ₄: the form
/// c·Σ dx_k∧dx̄_k, i.e. (x, y) ↦ c·(s − s̄).
struct PrefactorResult {
  std::string label;
  Cyclotomic prefactor;
  bool real_valued = false;
  bool integral = false;
  std::optional<Rational> pfaffian_abs;
  /// +1 or −1 if the form is ±E, 0 otherwise.
  int sign_vs_e = 0;
  bool principal() const { return real_valued && integral && pfaffian_abs == 1; }
};

/// 2/√19 and i/√19, evaluated in Q(ζ₇₆).
std::vector<PrefactorResult> prefactor_check();

struct LatticeRow {
  unsigned j = 0;
  Integer index_over_lambda0;
  Rational pfaffian_sq;
  bool integral = false;
  bool nu_stable = false;
  bool tau_stable = false;
  bool sigma_stable = false;
  bool mu_stable = false;
};

/// One row per Λ_j, j = 0..8.
std::vector<LatticeRow> lattice_table();

/// (1+2ν)(1+2ν̄).
Integer norm_one_plus_two_nu();

}  // namespace sevenfold::periods
