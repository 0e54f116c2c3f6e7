#include "oracles.hpp"

#include "charprod/error.hpp"
#include "charprod/zoo.hpp"

#include <gtest/gtest.h>

#include <array>
#include <map>

using namespace charprod;

TEST(Zoo, Orders) {
  const std::map<std::string, std::size_t> expected = {
      {"C1", 1},          {"C12", 12},   {"C2^3", 8},     {"D5", 10},     {"Q8", 8},
      {"Q16", 16},        {"Dic3", 12},  {"S4", 24},      {"A5", 60},     {"A6", 360},
      {"SL(2,3)", 24},    {"GL(2,3)", 48}, {"C2xS3", 12}, {"S3xS3", 36},  {"extraspecial:3", 27},
      {"extraspecial:5", 125}, {"metacyclic:7:3:2", 21}, {"frobenius:7:3", 1029}};
  for (const auto& [label, n] : expected) {
    const Group g = from_label(label);
    EXPECT_EQ(g.order(), n) << label;
    EXPECT_EQ(g.label(), label);
  }
}

TEST(Zoo, BadLabels) {
  for (const char* bad : {"", "X3", "C", "C0", "S9", "extraspecial:4", "metacyclic:7:3:3", "C2x"})
    EXPECT_THROW(from_label(bad), Error) << bad;
}

TEST(Zoo, ConstructorsAreGroups) {
  for (const Group& g : {cyclic(1), elementary_abelian(3, 2), dihedral(6), quaternion(16), symmetric(5),
                         alternating(5), special_linear_2_3(), general_linear_2_3(), metacyclic(13, 4, 5),
                         direct_product(cyclic(3), dihedral(4))})
    EXPECT_TRUE(g.is_associative_exhaustive()) << g.label();
  EXPECT_EQ(cyclic(1).order(), 1u);
}

TEST(Zoo, ExtraspecialStructure) {
  for (unsigned p : {3u, 5u, 7u}) {
    const Group e = extraspecial_p3_exp_p(p);
    ASSERT_EQ(e.order(), std::size_t(p) * p * p);
    EXPECT_EQ(e.exponent(), p);
    EXPECT_EQ(center(e).order(), p);
    EXPECT_EQ(derived_subgroup(e, Subgroup::whole(e)), center(e));
    const auto classes = oracle::conjugacy_classes(e);
    std::size_t singletons = 0, size_p = 0;
    for (const auto& c : classes) {
      singletons += c.size() == 1;
      size_p += c.size() == p;
    }
    EXPECT_EQ(singletons, p);
    EXPECT_EQ(size_p, std::size_t(p) * p - 1);
    EXPECT_EQ(classes.size(), std::size_t(p) * p + p - 1);
  }
}

TEST(Zoo, FrobeniusActionIsFixedPointFree) {
  const unsigned p = 7, q = 3;
  const Group e = extraspecial_p3_exp_p(p);
  std::size_t x = 1;
  for (std::size_t e0 = 1; e0 < e.order(); ++e0)
    EXPECT_NE(frobenius_aE_action(p, q, e0), e0);
  // an automorphism of order q
  for (std::size_t a = 0; a < e.order(); ++a)
    for (std::size_t b = 0; b < e.order(); ++b)
      ASSERT_EQ(frobenius_aE_action(p, q, e.mul(Element(a), Element(b))),
                e.mul(Element(frobenius_aE_action(p, q, a)), Element(frobenius_aE_action(p, q, b))));
  for (unsigned k = 0; k < q; ++k)
    x = frobenius_aE_action(p, q, x);
  EXPECT_EQ(x, 1u);

  const Group g = frobenius_aE(p, q);
  EXPECT_EQ(g.order(), std::size_t(q) * p * p * p);
  EXPECT_TRUE(g.is_associative_exhaustive());
}

TEST(Zoo, FrobeniusNeedsOddQ) { EXPECT_THROW(frobenius_aE(3, 2), PreconditionError); }

// An automorphism of E is determined by the images of two generators.
// Search all pairs for an involution that fixes only the identity.
TEST(Zoo, NoFixedPointFreeInvolutionOfExtraspecial3) {
  const Group e = extraspecial_p3_exp_p(3);
  const auto& gens = e.generators();
  ASSERT_EQ(gens.size(), 2u);
  // words: element = x^i y^j [x,y]^k
  std::vector<std::array<unsigned, 3>> word(e.order());
  std::vector<char> seen(e.order(), 0);
  const Element c = e.commutator(gens[0], gens[1]);
  for (unsigned i = 0; i < 3; ++i)
    for (unsigned j = 0; j < 3; ++j)
      for (unsigned k = 0; k < 3; ++k) {
        const Element w = e.mul(e.mul(e.power(gens[0], i), e.power(gens[1], j)), e.power(c, k));
        ASSERT_FALSE(seen[w]);
        seen[w] = 1;
        word[w] = {i, j, k};
      }

  std::size_t automorphisms = 0, involutions = 0, fixed_point_free_involutions = 0;
  for (Element x = 0; x < e.order(); ++x)
    for (Element y = 0; y < e.order(); ++y) {
      const Element z = e.commutator(x, y);
      std::vector<Element> phi(e.order());
      std::vector<char> hit(e.order(), 0);
      bool bijective = true;
      for (Element w = 0; w < e.order(); ++w) {
        const auto& [i, j, k] = word[w];
        phi[w] = e.mul(e.mul(e.power(x, i), e.power(y, j)), e.power(z, k));
        if (hit[phi[w]])
          bijective = false;
        hit[phi[w]] = 1;
      }
      if (!bijective)
        continue;
      bool hom = true;
      for (Element a = 0; a < e.order() && hom; ++a)
        for (Element b = 0; b < e.order() && hom; ++b)
          hom = phi[e.mul(a, b)] == e.mul(phi[a], phi[b]);
      if (!hom)
        continue;
      ++automorphisms;
      bool identity = true, involution = true, fpf = true;
      for (Element w = 0; w < e.order(); ++w) {
        identity = identity && phi[w] == w;
        involution = involution && phi[phi[w]] == w;
        if (w != 0 && phi[w] == w)
          fpf = false;
      }
      if (involution && !identity) {
        ++involutions;
        fixed_point_free_involutions += fpf;
      }
    }
  // |Aut(E)| = p^2 |GL(2,p)| = 9 * 48
  EXPECT_EQ(automorphisms, 432u);
  EXPECT_GT(involutions, 0u);
  EXPECT_EQ(fixed_point_free_involutions, 0u);
}

TEST(Zoo, CorpusIsDeterministicAndDeduplicated) {
  const auto a = corpus_labels(CorpusSpec{});
  const auto b = corpus_labels(CorpusSpec{});
  EXPECT_EQ(a, b);
  std::set<std::string> unique(a.begin(), a.end());
  EXPECT_EQ(unique.size(), a.size());
  for (const char* named : {"A6", "extraspecial:5", "extraspecial:7", "frobenius:7:3"})
    EXPECT_TRUE(unique.count(named)) << named;

  CorpusSpec small;
  small.max_order = 12;
  small.include_named = false;
  for (const Group& g : corpus(small))
    EXPECT_LE(g.order(), 12u) << g.label();
}
