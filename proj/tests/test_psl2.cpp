#include <gtest/gtest.h>

#include <numeric>

#include "sevenfold/elimination.hpp"
#include "sevenfold/psl2.hpp"
#include "support/generators.hpp"

using namespace sevenfold;
using namespace sevenfold::psl2;

namespace {

std::vector<std::size_t> class_sizes(const ConjugacyData& d) {
  std::vector<std::size_t> s;
  for (const auto& c : d.classes) s.push_back(c.size);
  return s;
}

std::vector<Cyclotomic> w9_row() {
  const auto nu = gauss_nu();
  return {9, nu, nu.conj(), 0, 0, 0, 0, 1, -1, 1, -1, 1};
}

ProjectiveRep& certified_rep() {
  static ProjectiveRep rep = [] {
    auto r = build_rep();
    r.certify_full();
    return r;
  }();
  return rep;
}

}  // namespace

TEST(GroupElement, NormalizationAndValidation) {
  EXPECT_EQ(GroupElement(18, 0, 0, 18), GroupElement());
  EXPECT_EQ(GroupElement(10, 3, 0, 2).a(), 9);  // −(10,3,0,2) = (9,16,0,17)
  EXPECT_THROW(GroupElement(1, 1, 1, 1), std::invalid_argument);
  const GroupElement g(2, 3, 1, 2);
  EXPECT_TRUE((g * g.inverse()).is_identity());
  EXPECT_EQ(g.pow(g.order()), GroupElement());
}

TEST(Enumerate, GroupG) {
  const auto& g = group_data(GroupTag::G);
  EXPECT_EQ(g.order(), 3420u);
  EXPECT_EQ(g.order(), 19u * (19u * 19u - 1u) / 2u);
  EXPECT_EQ(g.classes.size(), 12u);
  EXPECT_EQ(class_sizes(g), (std::vector<std::size_t>{1, 180, 180, 380, 380, 380, 380, 342, 342, 342, 342, 171}));
  std::vector<unsigned> orders;
  for (const auto& c : g.classes) orders.push_back(c.order);
  EXPECT_EQ(orders, (std::vector<unsigned>{1, 19, 19, 9, 9, 3, 9, 10, 5, 10, 5, 2}));
}

TEST(Enumerate, GroupH) {
  const auto& h = group_data(GroupTag::H);
  EXPECT_EQ(h.order(), 171u);
  EXPECT_EQ(h.classes.size(), 11u);
  EXPECT_EQ(class_sizes(h), (std::vector<std::size_t>{1, 19, 19, 19, 19, 19, 19, 19, 19, 9, 9}));
  // a^{-1} b a = b^4
  const GroupElement a(9, 0, 0, 17), b(1, 1, 0, 1);
  EXPECT_EQ(a.inverse() * b * a, b.pow(4));
}

TEST(Enumerate, ClassSizesMatchFormulas) {
  const std::size_t q = 19;
  auto s = class_sizes(group_data(GroupTag::G));
  EXPECT_EQ(s[1], (q * q - 1) / 2);
  EXPECT_EQ(s[3], q * (q + 1));
  EXPECT_EQ(s[7], q * (q - 1));
  EXPECT_EQ(s[11], q * (q - 1) / 2);
  EXPECT_EQ(std::accumulate(s.begin(), s.end(), std::size_t{0}), 3420u);
}

TEST(PowerClass, UnipotentClasses) {
  const auto& g = group_data(GroupTag::G);
  EXPECT_EQ(g.power_class(1, 2), 2);
  EXPECT_EQ(g.power_class(1, 3), 2);
  EXPECT_EQ(g.power_class(2, 2), 1);
  EXPECT_EQ(g.power_class(2, 3), 1);
  EXPECT_EQ(g.square_class[1], 2);
}

TEST(PowerClass, InvolutionFromOrderTen) {
  const auto& g = group_data(GroupTag::G);
  const int c = g.power_class(7, 5);
  EXPECT_EQ(c, 11);
  EXPECT_EQ(g.classes[static_cast<std::size_t>(c)].order, 2u);
}

TEST(PowerClass, Identity) {
  const auto& g = group_data(GroupTag::G);
  for (long k : {0L, 1L, 5L, 171L}) EXPECT_EQ(g.power_class(0, k), 0);
  EXPECT_THROW(g.power_class(1, -1), std::invalid_argument);
}

TEST(Subgroup, StabilizerOfInfinity) {
  const auto& g = group_data(GroupTag::G);
  std::size_t fixing = 0;
  for (const auto& x : g.elements)
    if (x.c() == 0) ++fixing;
  EXPECT_EQ(fixing, 171u);
  EXPECT_EQ(count_conjugates_of_h(), 20u);
}

TEST(Subgroup, Fusion) {
  auto f = fusion_h_to_g();
  EXPECT_EQ(f, (std::vector<int>{0, 3, 4, 5, 6, 6, 5, 4, 3, 1, 2}));
}

TEST(Words, IdentityAndGenerators) {
  CayleyTree tree;
  EXPECT_TRUE(tree.word_for(GroupElement()).empty());
  EXPECT_EQ(tree.word_for(tree.generators().tau), (Word{Letter::tau}));
  EXPECT_EQ(tree.word_for(tree.generators().mu), (Word{Letter::mu}));
  EXPECT_EQ(tree.reached(), 3420u);
}

TEST(Words, RandomRoundTrip) {
  CayleyTree tree;
  oracle::Gen gen(7);
  const auto& g = group_data(GroupTag::G);
  for (int trial = 0; trial < 200; ++trial) {
    const auto& x = g.elements[static_cast<std::size_t>(gen.integer(0, 3419))];
    auto w = tree.word_for(x);
    EXPECT_LE(w.size(), tree.diameter());
    EXPECT_EQ(tree.evaluate(w), x);
  }
}

TEST(AbstractGenerators, Orders) {
  Generators gens;
  EXPECT_EQ(gens.tau.order(), 19u);
  EXPECT_EQ(gens.sigma.order(), 9u);
  EXPECT_EQ(gens.mu.order(), 2u);
  // matches S·T·S⁻¹ = T⁹
  EXPECT_EQ(gens.sigma * gens.tau * gens.sigma.inverse(), gens.tau.pow(9));
}

TEST(Matrices, SigmaCycle) {
  std::vector<int> images;
  for (long k = 1; k <= 9; ++k) images.push_back(abs19(6 * k));
  EXPECT_EQ(images, (std::vector<int>{6, 7, 1, 5, 8, 2, 4, 9, 3}));
  // cycle (1 6 2 7 4 5 8 9 3)
  std::vector<int> cycle{1};
  while (cycle.size() < 10) cycle.push_back(abs19(6 * cycle.back()));
  EXPECT_EQ(cycle, (std::vector<int>{1, 6, 2, 7, 4, 5, 8, 9, 3, 1}));
}

TEST(Matrices, Orders) {
  const auto t = matrix_T(), s = matrix_S(), m = matrix_M();
  const auto id = Matrix<Cyclotomic>::identity(9);
  EXPECT_EQ(power(t, 19), id);
  EXPECT_NE(power(t, 1), id);
  EXPECT_EQ(power(s, 9), id);
  EXPECT_NE(power(s, 3), id);
  EXPECT_TRUE(projectively_equal(m * m, id));
  EXPECT_EQ(m * m, id);
}

TEST(Matrices, ConjugationOfT) {
  const auto t = matrix_T(), s = matrix_S();
  auto sinv = inverse(s);
  ASSERT_TRUE(sinv);
  EXPECT_TRUE(projectively_equal(s * t * *sinv, power(t, 9)));
}

TEST(Matrices, Unitary) {
  EXPECT_TRUE(is_unitary(matrix_T()));
  EXPECT_TRUE(is_unitary(matrix_S()));
  EXPECT_TRUE(is_unitary(matrix_M()));
}

TEST(Packed, RoundTripAndProduct) {
  const auto m = matrix_M(), t = matrix_T();
  auto pm = PackedMatrix19::from_matrix(m), pt = PackedMatrix19::from_matrix(t);
  EXPECT_EQ(pm.to_matrix(), m);
  EXPECT_EQ((pm * pt).to_matrix(), m * t);
  EXPECT_EQ(pm.conj().to_matrix(), m.map([](const Cyclotomic& z) { return z.conj(); }));
  EXPECT_TRUE((pm * pm).is_identity());
  EXPECT_EQ(pm.trace(), m.trace());
}

TEST(Certification, ClassRepresentatives) {
  auto rep = build_rep();
  auto c = rep.certify_light();
  EXPECT_TRUE(c.passed) << c.first_failure;
  EXPECT_TRUE(c.exact);
  EXPECT_EQ(c.edges_checked, 37u);
}

TEST(Certification, AllEdges) {
  auto& rep = certified_rep();
  const auto& c = rep.certificate();
  EXPECT_EQ(c.scope, "all-edges");
  EXPECT_TRUE(c.passed) << c.first_failure;
  EXPECT_TRUE(c.exact);
  EXPECT_EQ(c.edges_checked, 3u * 3420u);
  for (std::size_t i = 0; i < 3420; i += 97) EXPECT_TRUE(is_unitary(rep.all_matrices()[i]));
}

TEST(Certification, LiteralAssignmentFails) {
  ProjectiveRep rep(matrix_T(), matrix_S(), matrix_M(), literal_generators());
  auto c = rep.certify_full();
  EXPECT_FALSE(c.passed);
  EXPECT_GT(c.edges_failed, 0u);
  EXPECT_FALSE(c.first_failure.empty());
  EXPECT_FALSE(rep.certified());
  EXPECT_THROW(rep.class_traces(), std::logic_error);
}

TEST(Certification, VariantWithoutLegendreFails) {
  ProjectiveRep rep(matrix_T(), matrix_S(), matrix_M_plain());
  EXPECT_FALSE(rep.certify_light().passed);
}

TEST(TraceCharacter, MatchesW9Row) {
  auto traces = certified_rep().class_traces();
  EXPECT_EQ(traces, w9_row());
}

TEST(TraceCharacter, LightCertificateSuffices) {
  auto rep = build_rep();
  EXPECT_THROW(rep.class_traces(), std::logic_error);
  rep.certify_light();
  EXPECT_EQ(rep.class_traces(), w9_row());
}
