#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sevenfold/cyclotomic.hpp"
#include "sevenfold/matrix.hpp"
#include "sevenfold/packed_matrix.hpp"

namespace sevenfold::psl2 {

constexpr int kQ = 19;

/// Element of PSL₂(F₁₉) as a determinant-one matrix [[a, b], [c, d]]
/// normalized so that its first nonzero entry in scan order lies in 1..9.
class GroupElement {
 public:
  GroupElement() : e_{1, 0, 0, 1} {}
  /// Throws std::invalid_argument unless ad − bc ≡ 1 (mod 19).
  GroupElement(long a, long b, long c, long d);

  int a() const noexcept { return e_[0]; }
  int b() const noexcept { return e_[1]; }
  int c() const noexcept { return e_[2]; }
  int d() const noexcept { return e_[3]; }

  GroupElement inverse() const;
  GroupElement pow(long k) const;
  unsigned order() const;
  bool is_identity() const noexcept { return e_ == std::array<std::uint8_t, 4>{1, 0, 0, 1}; }
  /// Dense code in [0, 19⁴) used for lookups.
  std::uint32_t code() const noexcept { return ((e_[0] * 19u + e_[1]) * 19u + e_[2]) * 19u + e_[3]; }

  friend GroupElement operator*(const GroupElement& x, const GroupElement& y);
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;

  std::string to_string() const;

 private:
  std::array<std::uint8_t, 4> e_;
};

enum class GroupTag { G, H };

struct ConjugacyClass {
  std::string label;
  GroupElement rep;
  std::size_t size = 0;
  unsigned order = 0;
};

struct ConjugacyData {
  GroupTag group = GroupTag::G;
  std::vector<GroupElement> elements;  // canonical enumeration order
  std::vector<ConjugacyClass> classes;  // frozen table order
  std::vector<int> class_of_element;  // parallel to elements
  std::vector<int> square_class;  // class of g², per class
  std::vector<int> cube_class;  // class of g³, per class

  std::size_t order() const noexcept { return elements.size(); }
  /// Index of g in `elements`, or −1.
  int index_of(const GroupElement& g) const;
  int class_of(const GroupElement& g) const;
  int power_class(int cls, long k) const;

  std::vector<int> lookup;  // code → element index
};

/// Full enumeration with classes in the frozen order
///   G: 1, w₁, w₂ = w₁², x, x², x³, x⁴, y, y², y³, y⁴, y⁵
///   H: 1, a, a², …, a⁸, b, b²
/// where w₁ = b = [[1,1],[0,1]], x = a = diag(9, 17) and y is the first
/// element of order 10 in enumeration order.
ConjugacyData enumerate(GroupTag group);

/// Cached enumeration results.
const ConjugacyData& group_data(GroupTag group);

/// G-class of each H-class, by enumeration.
std::vector<int> fusion_h_to_g();

/// Number of distinct conjugates of H in G.
std::size_t count_conjugates_of_h();

enum class Letter : std::uint8_t { tau, sigma, mu };
using Word = std::vector<Letter>;

struct Generators {
  GroupElement tau{1, 1, 0, 1};
  GroupElement sigma{3, 0, 0, 13};
  GroupElement mu{0, 9, 2, 0};
  GroupElement image(Letter l) const;
};

/// The literal assignment μ ↔ [[0,1],[18,0]]; fails certification.
Generators literal_generators();

/// Breadth-first words from the identity (right multiplication, letters
/// tried in the order τ, σ, μ).
class CayleyTree {
 public:
  explicit CayleyTree(const Generators& gens = {});
  const Generators& generators() const noexcept { return gens_; }
  /// Throws std::invalid_argument if g is not reachable.
  Word word_for(const GroupElement& g) const;
  GroupElement evaluate(const Word& w) const;
  /// Element indices (into group_data(G).elements) in BFS order with
  /// parent index and the letter of the tree edge into them.
  const std::vector<int>& bfs_order() const noexcept { return order_; }
  int parent(int index) const { return parent_[static_cast<std::size_t>(index)]; }
  Letter parent_letter(int index) const { return letter_[static_cast<std::size_t>(index)]; }
  std::size_t reached() const noexcept { return order_.size(); }
  std::size_t diameter() const noexcept { return diameter_; }

 private:
  Generators gens_;
  std::vector<int> order_, parent_;
  std::vector<Letter> letter_;
  std::size_t diameter_ = 0;
};

std::string to_string(const Word& w);

/// 9×9 generator matrices over Q(ζ₁₉), indices 1..9 ↔ rows 0..8.
///   T = diag(ξ^{j²}),  S: e_k ↦ e_{|6k|},
///   M_{kj} = −(i/√19)·(kj | 19)·(ξ^{kj} − ξ^{−kj}),  i/√19 = (1+2ν)/19.
/// M carries the sign that makes the Adler cubic invariant with scalar 1.
Matrix<Cyclotomic> matrix_T();
Matrix<Cyclotomic> matrix_S();
Matrix<Cyclotomic> matrix_M();
/// M without the Legendre factor.
Matrix<Cyclotomic> matrix_M_plain();

/// |t|: the representative of ±t mod 19 in 1..9.
int abs19(long t);

struct Certificate {
  std::string scope;  // "class-representatives" or "all-edges"
  bool passed = false;
  bool exact = false;  // every edge held with scalar exactly 1
  std::size_t edges_checked = 0;
  std::size_t edges_failed = 0;
  std::string first_failure;
};

/// Generator matrices plus a homomorphism certificate.
class ProjectiveRep {
 public:
  ProjectiveRep(Matrix<Cyclotomic> t, Matrix<Cyclotomic> s, Matrix<Cyclotomic> m, Generators gens = {});

  const Matrix<Cyclotomic>& generator(Letter l) const;
  const Generators& generators() const noexcept { return tree_.generators(); }
  const CayleyTree& tree() const noexcept { return tree_; }
  std::size_t dim() const noexcept { return gen_[0].rows(); }

  /// Matrix of an abstract element via its breadth-first word.
  PackedMatrix19 packed(const GroupElement& g) const;
  Matrix<Cyclotomic> matrix(const GroupElement& g) const { return packed(g).to_matrix(); }

  /// Edge checks x·g for class representatives x and the three generators,
  /// plus M² = 1 projectively.
  Certificate certify_light();
  /// All 3·3420 edges; materializes every element matrix.
  Certificate certify_full();

  bool certified() const noexcept { return certified_; }
  const Certificate& certificate() const noexcept { return cert_; }

  /// Valid after certify_full(): matrices indexed like group_data(G).elements.
  const std::vector<PackedMatrix19>& all_matrices() const;

  /// Trace at one representative per class (frozen order); throws
  /// std::logic_error unless certified.
  std::vector<Cyclotomic> class_traces() const;

 private:
  bool check_edge(const PackedMatrix19& x, const PackedMatrix19& g, const PackedMatrix19& xg, bool& exact) const;

  std::array<Matrix<Cyclotomic>, 3> gen_;
  std::array<PackedMatrix19, 3> packed_gen_;
  CayleyTree tree_;
  std::vector<PackedMatrix19> all_;
  bool certified_ = false;
  Certificate cert_;
};

/// The representation with the working generator assignment.
ProjectiveRep build_rep();

bool is_unitary(const Matrix<Cyclotomic>& g);
bool is_unitary(const PackedMatrix19& g);

}  // namespace sevenfold::psl2
