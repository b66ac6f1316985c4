#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sevenfold/cyclotomic.hpp"
#include "sevenfold/matrix.hpp"
#include "sevenfold/packed_matrix.hpp"
#include "sevenfold/psl2.hpp"

namespace sevenfold::characters {

using psl2::GroupTag;

/// Irreducible characters of G = PSL₂(F₁₉) or of the Borel subgroup H,
/// classes in the frozen order of psl2::enumerate.
///   G: T1, W9, W9bar, W18^1..W18^4, W20^1..W20^4, W19
///   H: V0..V8, V9, V9bar
/// with a_k = ζ₉^k + ζ₉^{−k}, b_k = −(ζ₁₀^k + ζ₁₀^{−k}) and, on H, μ = ζ₉.
struct CharacterTable {
  GroupTag group = GroupTag::G;
  std::size_t group_order = 0;
  std::vector<std::string> class_labels;
  std::vector<std::size_t> class_sizes;
  std::vector<std::string> names;
  std::vector<std::vector<Cyclotomic>> rows;

  std::size_t class_count() const noexcept { return class_labels.size(); }
  /// Throws std::invalid_argument for an unknown name.
  std::size_t index(std::string_view name) const;
};

const CharacterTable& table(GroupTag group);

/// Class function on a stored table.
class Character {
 public:
  /// Throws std::invalid_argument if the length is not the class count.
  Character(const CharacterTable& t, std::vector<Cyclotomic> values);

  const CharacterTable& table() const noexcept { return *table_; }
  const std::vector<Cyclotomic>& values() const noexcept { return values_; }
  const Cyclotomic& operator[](std::size_t cls) const { return values_.at(cls); }
  const Cyclotomic& degree() const { return values_.front(); }

  Character conj() const;

  friend Character operator+(const Character& a, const Character& b);
  friend Character operator-(const Character& a, const Character& b);
  friend Character operator*(const Integer& k, const Character& a);
  friend bool operator==(const Character& a, const Character& b);

  std::string to_string() const;

 private:
  const CharacterTable* table_;
  std::vector<Cyclotomic> values_;
};

/// Row of the table by name.
Character irreducible(GroupTag group, std::string_view name);
Character trivial(GroupTag group);

/// ⟨a, b⟩ = (1/|G|) Σ_C |C| a(C) conj(b(C)). Throws std::invalid_argument
/// on a table mismatch.
Cyclotomic inner_product(const Character& a, const Character& b);

/// χ_{Sym³V}(g) = (χ(g)³ + 3χ(g²)χ(g) + 2χ(g³)) / 6.
Character sym3(const Character& x);
Character tensor(const Character& a, const Character& b);

/// Multiplicities of the irreducibles, in table order.
struct Decomposition {
  const CharacterTable* table = nullptr;
  std::vector<Integer> multiplicities;

  Integer multiplicity(std::string_view name) const;
  Character reconstruct() const;
  /// Sum of dim·multiplicity.
  Integer dimension() const;
  /// e.g. "W9bar + W18^1 + 2 W20^3"; "0" when empty.
  std::string to_string() const;
  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Throws std::domain_error if some multiplicity is not a nonnegative
/// integer, or if the multiplicities do not reconstruct x.
Decomposition decompose(const Character& x);
/// Builds a decomposition from name/multiplicity pairs.
Decomposition make_decomposition(GroupTag group, const std::vector<std::pair<std::string, long>>& parts);

/// Restriction along the class fusion H → G.
Character restrict_to_H(const Character& x);

/// Trace of the certified representation at each class.
Character trace_character(const psl2::ProjectiveRep& rep);

/// Coefficient of each g ∈ C in ψ_W = (dim W/|G|) Σ_g conj(χ_W(g)) g.
std::vector<Cyclotomic> projector_coefficients(const Character& w);

/// Σ_{g∈C} ρ(g) per G-class for a representation with matrices over Q(ζ₁₉).
struct ClassSums {
  std::size_t dim = 0;
  std::vector<PackedMatrix19> sums;
};

/// Throws std::logic_error unless rep has a full certificate.
ClassSums class_sums(const psl2::ProjectiveRep& rep);
/// Class sums of the complex-conjugate representation.
ClassSums conjugate(const ClassSums& s);
/// Class sums of ρ ⊗ ρ̄ (dimension dim²); accumulates every element.
ClassSums tensor_conj_class_sums(const psl2::ProjectiveRep& rep);

struct Projector {
  Matrix<Cyclotomic> matrix;
  Cyclotomic trace;
  bool idempotent = false;
  /// Equals the trace for an idempotent with integral trace.
  std::optional<Integer> rank;
};

/// Applies ψ_W. Throws std::invalid_argument above dimension 81.
Projector apply_projector(const ClassSums& sums, const Character& w);

struct IntegralityRow {
  std::string name;  // χ₀ … χ₄
  std::vector<std::string> constituents;
  Character chi;
  bool integral = false;
  Integer degree;
  /// Σ dim·multiplicity of the constituents inside 1 ⊕ (Sym³W9 − W9⊗W9bar).
  Integer subtorus_dim;
};

std::vector<IntegralityRow> integrality_check();

/// Character of Sym³W9 − W9 ⊗ W9bar.
Character h43_dual();

/// Restrictions of W20^1..W20^4 to H, and which of them equal
/// V3 + V6 + V9 + V9bar.
struct W20Restriction {
  std::string name;
  Decomposition restriction;
  bool matches_v3_v6 = false;
};
std::vector<W20Restriction> w20_restrictions();

}  // namespace sevenfold::characters
