#include <gtest/gtest.h>

#include <algorithm>

#include "sevenfold/characters.hpp"
#include "support/embedding.hpp"
#include "support/generators.hpp"

using namespace sevenfold;
using namespace sevenfold::characters;

namespace {

const psl2::ProjectiveRep& certified_rep() {
  static const psl2::ProjectiveRep rep = [] {
    auto r = psl2::build_rep();
    r.certify_full();
    return r;
  }();
  return rep;
}

// ⟨a, b⟩ evaluated in floating point at the standard embedding.
oracle::Complex numeric_inner_product(const Character& a, const Character& b) {
  const auto& t = a.table();
  oracle::Complex sum;
  for (std::size_t c = 0; c < t.class_count(); ++c) {
    const auto x = oracle::evaluate(a[c]), y = oracle::evaluate(b[c]);
    const oracle::Real w(static_cast<long>(t.class_sizes[c]));
    sum.re += w * (x.re * y.re + x.im * y.im);
    sum.im += w * (x.im * y.re - x.re * y.im);
  }
  const oracle::Real n(static_cast<long>(t.group_order));
  return {sum.re / n, sum.im / n};
}

// Trace of Sym³A by direct expansion: the coefficient of x_i x_j x_k in
// (Ax)_i (Ax)_j (Ax)_k, summed over multisets i ≤ j ≤ k.
Cyclotomic sym3_trace_by_monomials(const Matrix<Cyclotomic>& a) {
  const std::size_t n = a.rows();
  Cyclotomic total;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = j; k < n; ++k) {
        std::array<std::size_t, 3> idx{i, j, k}, perm = idx;
        do {
          total += a(i, perm[0]) * a(j, perm[1]) * a(k, perm[2]);
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
  return total;
}

}  // namespace

TEST(CharacterTable, Shapes) {
  const auto& g = table(GroupTag::G);
  EXPECT_EQ(g.class_count(), 12u);
  EXPECT_EQ(g.names.size(), 12u);
  EXPECT_EQ(g.class_labels.front(), "1");
  EXPECT_EQ(g.class_labels.back(), "y5");
  const auto& h = table(GroupTag::H);
  EXPECT_EQ(h.class_count(), 11u);
  EXPECT_EQ(h.names.size(), 11u);
  EXPECT_THROW(g.index("W21"), std::invalid_argument);
}

TEST(CharacterTable, DegreesSquaredSumToOrder) {
  for (auto tag : {GroupTag::G, GroupTag::H}) {
    const auto& t = table(tag);
    Integer sum = 0;
    for (const auto& row : t.rows) sum += *row[0].try_integer() * *row[0].try_integer();
    EXPECT_EQ(sum, Integer(static_cast<long>(t.group_order)));
  }
  EXPECT_EQ(table(GroupTag::H).group_order, 171u);
}

TEST(CharacterTable, FirstOrthogonality) {
  for (auto tag : {GroupTag::G, GroupTag::H}) {
    const auto& t = table(tag);
    for (std::size_t i = 0; i < t.rows.size(); ++i)
      for (std::size_t j = 0; j < t.rows.size(); ++j) {
        const auto ip = inner_product(Character(t, t.rows[i]), Character(t, t.rows[j]));
        EXPECT_EQ(ip, Cyclotomic(i == j ? 1 : 0)) << t.names[i] << " " << t.names[j];
      }
  }
}

TEST(CharacterTable, SecondOrthogonality) {
  for (auto tag : {GroupTag::G, GroupTag::H}) {
    const auto& t = table(tag);
    for (std::size_t c = 0; c < t.class_count(); ++c)
      for (std::size_t d = 0; d < t.class_count(); ++d) {
        Cyclotomic s;
        for (const auto& row : t.rows) s += row[c] * row[d].conj();
        const long expected = c == d ? static_cast<long>(t.group_order / t.class_sizes[c]) : 0;
        EXPECT_EQ(s, Cyclotomic(expected)) << t.class_labels[c] << " " << t.class_labels[d];
      }
  }
}

TEST(CharacterTable, NumericInnerProductsAgree) {
  const auto& t = table(GroupTag::G);
  oracle::Gen gen(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = Character(t, t.rows[static_cast<std::size_t>(gen.integer(0, 11))]) +
                   Character(t, t.rows[static_cast<std::size_t>(gen.integer(0, 11))]);
    const auto b = Character(t, t.rows[static_cast<std::size_t>(gen.integer(0, 11))]);
    const auto exact = oracle::evaluate(inner_product(a, b));
    EXPECT_LT(oracle::distance(exact, numeric_inner_product(a, b)), oracle::Real("1e-40"));
  }
}

TEST(InnerProduct, Examples) {
  const auto w9 = irreducible(GroupTag::G, "W9"), w9b = irreducible(GroupTag::G, "W9bar");
  EXPECT_EQ(inner_product(w9, w9), Cyclotomic(1));
  EXPECT_EQ(inner_product(w9, w9b), Cyclotomic(0));
  EXPECT_EQ(inner_product(sym3(w9), irreducible(GroupTag::G, "W20^3")), Cyclotomic(2));
}

TEST(InnerProduct, TableMismatch) {
  EXPECT_THROW(inner_product(trivial(GroupTag::G), trivial(GroupTag::H)), std::invalid_argument);
  EXPECT_THROW(tensor(trivial(GroupTag::G), trivial(GroupTag::H)), std::invalid_argument);
}

TEST(Sym3, W9Values) {
  const auto nu = gauss_nu();
  const auto v = sym3(irreducible(GroupTag::G, "W9"));
  const std::vector<Cyclotomic> expected{165, Cyclotomic(3) - nu, Cyclotomic(3) - nu.conj(), 0, 0, 3, 0, 0, 0, 0, 0, 5};
  EXPECT_EQ(v.values(), expected);
}

TEST(Sym3, TrivialAndDegree) {
  EXPECT_EQ(sym3(trivial(GroupTag::G)), trivial(GroupTag::G));
  EXPECT_EQ(sym3(trivial(GroupTag::H)), trivial(GroupTag::H));
  // C(9+2, 3)
  EXPECT_EQ(sym3(irreducible(GroupTag::G, "W9")).degree(), Cyclotomic(11 * 10 * 9 / 6));
}

TEST(Sym3, MatchesMonomialExpansion) {
  auto rep = psl2::build_rep();
  rep.certify_light();
  const auto v = sym3(trace_character(rep));
  const auto& data = psl2::group_data(GroupTag::G);
  for (std::size_t c = 0; c < data.classes.size(); ++c)
    EXPECT_EQ(v[c], sym3_trace_by_monomials(rep.matrix(data.classes[c].rep))) << data.classes[c].label;
}

TEST(Tensor, W9TimesConjugate) {
  const auto x = tensor(irreducible(GroupTag::G, "W9"), irreducible(GroupTag::G, "W9bar"));
  EXPECT_EQ(x.degree(), Cyclotomic(81));
  const auto d = decompose(x);
  EXPECT_EQ(d, make_decomposition(GroupTag::G, {{"T1", 1}, {"W20^1", 1}, {"W20^2", 1}, {"W20^3", 1}, {"W20^4", 1}}));
  EXPECT_EQ(d.dimension(), Integer(81));
  const auto w19 = irreducible(GroupTag::G, "W19");
  EXPECT_EQ(tensor(w19, trivial(GroupTag::G)), w19);
}

TEST(Decompose, Sym3W9) {
  const auto d = decompose(sym3(irreducible(GroupTag::G, "W9")));
  EXPECT_EQ(d, make_decomposition(GroupTag::G, {{"T1", 1},
                                                {"W9bar", 1},
                                                {"W18^1", 1},
                                                {"W18^3", 1},
                                                {"W20^1", 1},
                                                {"W20^2", 1},
                                                {"W20^3", 2},
                                                {"W20^4", 1},
                                                {"W19", 1}}));
  EXPECT_EQ(d.to_string(), "T1 + W9bar + W18^1 + W18^3 + W20^1 + W20^2 + 2 W20^3 + W20^4 + W19");
}

TEST(Decompose, H43Dual) {
  const auto d = decompose(h43_dual());
  EXPECT_EQ(d, make_decomposition(GroupTag::G, {{"W9bar", 1}, {"W18^1", 1}, {"W18^3", 1}, {"W19", 1}, {"W20^3", 1}}));
  EXPECT_EQ(d.dimension(), Integer(84));
  EXPECT_EQ(decompose(trivial(GroupTag::G) + h43_dual()).dimension(), Integer(85));
}

TEST(Decompose, Trivial) {
  EXPECT_EQ(decompose(trivial(GroupTag::G)).to_string(), "T1");
  EXPECT_EQ(decompose(trivial(GroupTag::H)).to_string(), "V0");
}

TEST(Decompose, RejectsNonCharacters) {
  const auto w9 = irreducible(GroupTag::G, "W9"), w9b = irreducible(GroupTag::G, "W9bar");
  EXPECT_THROW(decompose(w9 - w9b), std::domain_error);
  std::vector<Cyclotomic> half(12, Cyclotomic(make_rational(1, 2)));
  EXPECT_THROW(decompose(Character(table(GroupTag::G), half)), std::domain_error);
}

TEST(Decompose, RandomCombinationsRoundTrip) {
  oracle::Gen gen(3);
  for (auto tag : {GroupTag::G, GroupTag::H}) {
    const auto& t = table(tag);
    for (int trial = 0; trial < 15; ++trial) {
      Decomposition d;
      d.table = &t;
      for (std::size_t i = 0; i < t.names.size(); ++i) d.multiplicities.push_back(gen.coin(0.4) ? gen.integer(1, 3) : 0);
      EXPECT_EQ(decompose(d.reconstruct()), d);
    }
  }
}

TEST(Restrict, Examples) {
  auto r = [](const char* name) { return decompose(restrict_to_H(irreducible(GroupTag::G, name))); };
  EXPECT_EQ(r("W18^3"), make_decomposition(GroupTag::H, {{"V9", 1}, {"V9bar", 1}}));
  EXPECT_EQ(r("W19"), make_decomposition(GroupTag::H, {{"V0", 1}, {"V9", 1}, {"V9bar", 1}}));
  EXPECT_EQ(r("W20^1"), make_decomposition(GroupTag::H, {{"V1", 1}, {"V8", 1}, {"V9", 1}, {"V9bar", 1}}));
  EXPECT_EQ(r("W20^3"), make_decomposition(GroupTag::H, {{"V3", 1}, {"V6", 1}, {"V9", 1}, {"V9bar", 1}}));
  EXPECT_EQ(r("W9"), make_decomposition(GroupTag::H, {{"V9", 1}}));
}

TEST(Restrict, PreservesDegreeForEveryIrreducible) {
  const auto& t = table(GroupTag::G);
  for (std::size_t i = 0; i < t.names.size(); ++i) {
    const auto x = restrict_to_H(Character(t, t.rows[i]));
    EXPECT_EQ(x.degree(), t.rows[i][0]);
    EXPECT_EQ(decompose(x).dimension(), *t.rows[i][0].try_integer());
  }
  EXPECT_THROW(restrict_to_H(trivial(GroupTag::H)), std::invalid_argument);
}

TEST(Restrict, W20Flag) {
  const auto rows = w20_restrictions();
  ASSERT_EQ(rows.size(), 4u);
  std::vector<std::string> matching;
  for (const auto& r : rows)
    if (r.matches_v3_v6) matching.push_back(r.name);
  EXPECT_EQ(matching, std::vector<std::string>{"W20^3"});
}

TEST(TraceCharacter, DecomposesAsW9) {
  auto rep = psl2::build_rep();
  rep.certify_light();
  EXPECT_EQ(decompose(trace_character(rep)), make_decomposition(GroupTag::G, {{"W9", 1}}));
}

TEST(Integrality, ConstituentsAndDimensions) {
  const auto rows = integrality_check();
  ASSERT_EQ(rows.size(), 5u);
  std::vector<long> degrees, dims;
  for (const auto& r : rows) {
    EXPECT_TRUE(r.integral) << r.name;
    degrees.push_back(r.degree.get_si());
    dims.push_back(r.subtorus_dim.get_si());
  }
  EXPECT_EQ(degrees, (std::vector<long>{1, 18, 72, 19, 80}));
  EXPECT_EQ(dims, (std::vector<long>{1, 9, 36, 19, 20}));
  EXPECT_EQ(rows[1].chi[1], Cyclotomic(-1));
  EXPECT_EQ(rows[2].chi[7], Cyclotomic(b_k(1) + b_k(2) + b_k(3) + b_k(4)));
  EXPECT_TRUE(rows[2].chi[7].try_integer().has_value());
}

TEST(Projector, Coefficients) {
  const auto c = projector_coefficients(irreducible(GroupTag::G, "W9"));
  ASSERT_EQ(c.size(), 12u);
  EXPECT_EQ(c[0], Cyclotomic(make_rational(81, 3420)));
  EXPECT_EQ(c[1], gauss_nu().conj().scaled(make_rational(9, 3420)));
}

TEST(Projector, OnW9) {
  const auto sums = class_sums(certified_rep());
  const auto id = apply_projector(sums, irreducible(GroupTag::G, "W9"));
  EXPECT_TRUE(id.idempotent);
  EXPECT_EQ(id.matrix, Matrix<Cyclotomic>::identity(9));
  EXPECT_EQ(id.rank, Integer(9));
  const auto zero = apply_projector(sums, irreducible(GroupTag::G, "W9bar"));
  EXPECT_EQ(zero.matrix, Matrix<Cyclotomic>(9, 9));
  EXPECT_EQ(zero.rank, Integer(0));
  // coefficients outside Q(ζ₁₉)
  const auto w20 = apply_projector(sums, irreducible(GroupTag::G, "W20^1"));
  EXPECT_TRUE(w20.idempotent);
  EXPECT_EQ(w20.rank, Integer(0));
  const auto mirrored = apply_projector(conjugate(sums), irreducible(GroupTag::G, "W9bar"));
  EXPECT_EQ(mirrored.rank, Integer(9));
}

TEST(Projector, ClassSumsNeedCertificate) {
  auto rep = psl2::build_rep();
  EXPECT_THROW(class_sums(rep), std::logic_error);
  rep.certify_light();
  EXPECT_THROW(class_sums(rep), std::logic_error);
}

TEST(Projector, HeavyW20OnTensorSquare) {
  const auto sums = tensor_conj_class_sums(certified_rep());
  ASSERT_EQ(sums.dim, 81u);
  const auto p = apply_projector(sums, irreducible(GroupTag::G, "W20^3"));
  EXPECT_TRUE(p.idempotent);
  EXPECT_EQ(p.trace, Cyclotomic(20));
  EXPECT_EQ(p.rank, Integer(20));
  const auto t = apply_projector(sums, trivial(GroupTag::G));
  EXPECT_EQ(t.rank, Integer(1));
}
