#include "oracles.hpp"

#include "charprod/char_algebra.hpp"
#include "charprod/error.hpp"
#include "charprod/zoo.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace charprod;

namespace {

// |H| theta^G(g) = sum_{x in G} theta°(x g x^-1), theta° zero off H.
ClassFunction scaled_induction_by_definition(const Group& g, const EmbeddedGroup& h, const CharacterTable& th,
                                   const ClassFunction& theta, const CharacterTable& tg) {
  ClassFunction out;
  for (Element rep : tg.classes.reps) {
    Cyc acc = Cyc::integer(0, tg.exponent);
    for (Element x = 0; x < g.order(); ++x) {
      const auto local = h.from_parent[g.conjugate(rep, x)];
      if (local >= 0)
        acc += th.value_at(theta, Element(local));
    }
    out.push_back(acc);
  }
  return out;
}

} // namespace

TEST(CharAlgebra, InductionMatchesDefinition) {
  for (const char* label : {"S4", "A5", "SL(2,3)", "extraspecial:3", "D4xQ8"}) {
    const Group g = from_label(label);
    const auto tg = character_table(g);
    for (Element x : g.generators()) {
      const EmbeddedGroup h = materialize(g, subgroup_generated(g, std::vector<Element>{x}));
      const auto th = character_table(h.group);
      for (const auto& row : th.rows) {
        const ClassFunction fast = induce(th, row.values, h, tg);
        const ClassFunction slow = scaled_induction_by_definition(g, h, th, row.values, tg);
        for (std::size_t c = 0; c < fast.size(); ++c)
          EXPECT_EQ(fast[c] * std::int64_t(h.group.order()), slow[c]) << label;
      }
    }
  }
}

// [theta^G, chi]_G = [theta, chi_H]_H on random (H, theta, chi) triples.
TEST(CharAlgebra, FrobeniusReciprocity) {
  std::mt19937 rng(20240611);
  for (const char* label : {"S4", "GL(2,3)", "C3xS4", "extraspecial:5", "metacyclic:13:4:5", "C2xSL(2,3)"}) {
    const Group g = from_label(label);
    const auto tg = character_table(g);
    for (int trial = 0; trial < 6; ++trial) {
      std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
      const Element gens[2] = {Element(pick(rng)), Element(pick(rng))};
      const EmbeddedGroup h = materialize(g, subgroup_generated(g, gens));
      const auto th = character_table(h.group);
      const auto& theta = th.rows[pick(rng) % th.size()].values;
      const auto& chi = tg.rows[pick(rng) % tg.size()].values;
      const Restriction res = restrict_to(tg, chi, nullptr, h, th, g);
      EXPECT_EQ(inner_product(tg, induce(th, theta, h, tg), chi), inner_product(th, theta, res.values)) << label;
    }
  }
}

TEST(CharAlgebra, A6DegreeTenProduct) {
  const Group g = from_label("A6");
  const auto t = character_table(g);
  ASSERT_EQ(t[6].degree, 10u);
  const Decomposition d = norm_decomposition(t, t[6].values);
  EXPECT_EQ(d.coeffs, (std::vector<std::int64_t>{1, 2, 2, 2, 2, 3, 2}));
  EXPECT_EQ(format_decomposition(6, 10, d), "chi=6 deg=10 eta=6 decomp= 1*1 + 2*1 + 2*2 + 2*3 + 2*4 + 3*5 + 2*6");
}

TEST(CharAlgebra, ExtraspecialProductIsInducedFromCentre) {
  for (unsigned p : {3u, 5u}) {
    const Group e = extraspecial_p3_exp_p(p);
    const auto t = character_table(e);
    const Subgroup z = center(e);
    for (const auto& row : t.rows) {
      if (row.degree == 1)
        continue;
      EXPECT_EQ(row.degree, p);
      const Eta n = eta(t, row.values);
      EXPECT_EQ(n.n, std::size_t(p) * p - 1);
      const ClassFunction sq = product(row.values, conjugate_character(row.values));
      for (std::size_t c = 0; c < t.classes.count(); ++c) {
        const std::int64_t expect = z.contains(t.classes.reps[c]) ? std::int64_t(p) * p : 0;
        EXPECT_EQ(sq[c], Cyc::integer(expect));
      }
    }
  }
}

// A linear character of an abelian subgroup of index p induces to a
// nonlinear irreducible: eta goes from 0 up to p^2 - 1.
TEST(CharAlgebra, InductionCanRaiseEta) {
  const Group e = extraspecial_p3_exp_p(3);
  const auto t = character_table(e);
  const Subgroup z = center(e);
  Element x = 1;
  while (z.contains(x))
    ++x;
  const Subgroup a = join(e, z, subgroup_generated(e, std::vector<Element>{x}));
  ASSERT_EQ(a.order(), 9u);
  const EmbeddedGroup h = materialize(e, a);
  const auto th = character_table(h.group);
  bool found = false;
  for (const auto& row : th.rows) {
    const ClassFunction chi = induce(th, row.values, h, t);
    if (inner_product(t, chi, chi) != 1)
      continue;
    found = true;
    EXPECT_EQ(eta(th, row.values).n, 0u);
    EXPECT_EQ(eta(t, chi).n, 8u);
  }
  EXPECT_TRUE(found);
}

TEST(CharAlgebra, Preconditions) {
  const Group g = from_label("S3");
  const auto t = character_table(g);
  const ClassFunction reducible = sum(t[1].values, t[2].values);
  EXPECT_THROW(eta(t, reducible), PreconditionError);
  EXPECT_THROW(decompose(t, difference(t[1].values, t[2].values)), PreconditionError);
  const ClassFunction half = {Cyc::integer(1), Cyc::integer(0), Cyc::integer(0)};
  EXPECT_THROW(inner_product(t, half, t[0].values), InvariantError);

  const Element s = g.generators().front();
  const Subgroup sub = subgroup_generated(g, std::vector<Element>{s});
  if (!is_normal(g, sub)) {
    const EmbeddedGroup h = materialize(g, sub);
    const auto th = character_table(h.group);
    EXPECT_THROW(restrict_to_normal(t, t[2].values, h, th, g), PreconditionError);
    const Restriction r = restrict_to(t, t[2].values, nullptr, h, th, g);
    EXPECT_FALSE(r.normal);
    EXPECT_FALSE(r.irreducible);
  }
}

TEST(CharAlgebra, EtaIsOddOnlyForEvenOrder) {
  // a real constituent exists whenever eta is odd
  for (const char* label : {"S4", "Q8", "D4xQ8", "extraspecial:3", "metacyclic:7:3:2", "GL(2,3)"}) {
    const auto t = character_table(from_label(label));
    for (const auto& row : t.rows) {
      const Decomposition d = norm_decomposition(t, row.values);
      if (d.eta() % 2 == 1) {
        EXPECT_EQ(t.group_order % 2, 0u) << label;
        EXPECT_TRUE(real_constituent(t, d).has_value()) << label;
      }
    }
  }
}
