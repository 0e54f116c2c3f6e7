#include "oracles.hpp"

#include "charprod/error.hpp"
#include "charprod/normal_lattice.hpp"
#include "charprod/zoo.hpp"

#include <gtest/gtest.h>

using namespace charprod;

namespace {

const std::vector<std::string> kSample = {"C1",  "C6",      "C2^3",    "S3",      "D4",  "Q8",
                                          "A4",  "Dic3",    "S4",      "C3xS3",   "SL(2,3)",
                                          "A5",  "GL(2,3)", "extraspecial:3",     "metacyclic:7:3:2",
                                          "C2xQ8", "D4xQ8"};

} // namespace

TEST(Group, AxiomsHoldExhaustively) {
  for (const auto& label : kSample) {
    const Group g = from_label(label);
    EXPECT_TRUE(g.is_associative_exhaustive()) << label;
    for (Element x = 0; x < g.order(); ++x) {
      EXPECT_EQ(g.mul(0, x), x);
      EXPECT_EQ(g.mul(x, g.inv(x)), 0) << label;
      EXPECT_EQ(g.power(x, g.element_order(x)), 0) << label;
    }
  }
}

TEST(Group, LoaderRejectsBadTables) {
  EXPECT_THROW(load_group(""), ParseError);
  EXPECT_THROW(load_group("cayley 2\n0 1\n1 1\n"), ParseError);
  EXPECT_THROW(load_group("cayley 2\n1 0\n0 1\n"), ParseError);
  EXPECT_THROW(load_group("cayley 3\n0 1 2\n1 2 0\n"), ParseError);
  EXPECT_THROW(load_group("perm 3\n(1 4)\n"), ParseError);
  EXPECT_THROW(load_group("ring 3\n"), ParseError);
  // a Latin square with identity that is not associative
  EXPECT_THROW(load_group("cayley 5\n0 1 2 3 4\n1 0 3 4 2\n2 4 0 1 3\n3 2 4 0 1\n4 3 1 2 0\n"), ParseError);
  EXPECT_THROW(load_group("perm 7\n(1 2 3 4 5 6 7)\n(1 2)\n", 1000), CapacityError);
}

TEST(Group, CayleyRoundTrip) {
  for (const auto& label : kSample) {
    const Group g = from_label(label);
    const Group h = load_group(to_cayley_text(g));
    ASSERT_EQ(h.order(), g.order());
    for (Element a = 0; a < g.order(); ++a)
      for (Element b = 0; b < g.order(); ++b)
        ASSERT_EQ(h.mul(a, b), g.mul(a, b));
  }
}

TEST(Group, PermutationsComposeLeftToRight) {
  const Group g = load_group("perm 3\n(1 2)\n(2 3)\n");
  ASSERT_EQ(g.order(), 6u);
  const auto& perm = g.perm_presentation();
  ASSERT_TRUE(perm.has_value());
  EXPECT_EQ(perm->degree, 3u);
  EXPECT_FALSE(is_abelian(g, Subgroup::whole(g)));
}

TEST(Group, ClassesMatchOrbitEnumeration) {
  for (const auto& label : kSample) {
    const Group g = from_label(label);
    const Classes c = conjugacy_classes(g);
    std::set<std::vector<Element>> got(c.members.begin(), c.members.end());
    EXPECT_EQ(got, oracle::conjugacy_classes(g)) << label;
    EXPECT_EQ(c.reps[0], 0);
    for (std::size_t k = 0; k < c.count(); ++k) {
      EXPECT_EQ(c.sizes[k], c.members[k].size());
      EXPECT_EQ(c.class_of[g.inv(c.reps[k])], c.inverse_class[k]);
      EXPECT_EQ(g.order() % c.sizes[k], 0u);
    }
  }
}

TEST(Group, CenterAndDerivedLengthMatchBruteForce) {
  for (const auto& label : kSample) {
    const Group g = from_label(label);
    std::vector<Element> z;
    for (Element x = 0; x < g.order(); ++x)
      if (oracle::centralizer_order(g, x) == g.order())
        z.push_back(x);
    EXPECT_EQ(center(g).elements(), z) << label;
    const unsigned dl = oracle::derived_length(g);
    const auto got = derived_length(g);
    if (dl == ~0u)
      EXPECT_FALSE(got.has_value()) << label;
    else
      EXPECT_EQ(got, std::optional<unsigned>(dl)) << label;
  }
}

TEST(Group, QuotientNeedsNormalSubgroup) {
  const Group g = from_label("S3");
  const Element t = g.generators().front();
  const Subgroup s = subgroup_generated(g, std::vector<Element>{t});
  if (s.order() == 2)
    EXPECT_THROW(quotient(g, s), PreconditionError);
  const Quotient q = quotient(g, derived_subgroup(g, Subgroup::whole(g)));
  EXPECT_EQ(q.group.order(), 2u);
}

TEST(NormalLattice, MatchesBruteForceOnSample) {
  for (const auto& label : kSample) {
    const Group g = from_label(label);
    const auto t = character_table(g);
    std::set<std::vector<Element>> got;
    for (const auto& s : normal_subgroups(g, t))
      got.insert(s.elements());
    EXPECT_EQ(got, oracle::normal_subgroups(g)) << label;
  }
}

TEST(NormalLattice, ChiefSeriesAndSolvability) {
  struct Case {
    const char* label;
    bool solvable, supersolvable;
  };
  for (const Case& c : {Case{"S3", true, true}, Case{"D4", true, true}, Case{"A4", true, false},
                        Case{"S4", true, false}, Case{"A5", false, false}, Case{"extraspecial:3", true, true},
                        Case{"SL(2,3)", true, false}, Case{"metacyclic:7:3:2", true, true}}) {
    const Group g = from_label(c.label);
    const auto t = character_table(g);
    const auto lattice = normal_subgroups(g, t);
    const ChiefSeries cs = chief_series(g, lattice);
    EXPECT_EQ(is_solvable(g), c.solvable) << c.label;
    EXPECT_EQ(is_solvable(g) && is_supersolvable(cs), c.supersolvable) << c.label;
    ASSERT_TRUE(cs.terms.front().is_whole());
    ASSERT_TRUE(cs.terms.back().is_trivial());
    std::size_t prod = 1;
    for (std::size_t j = 1; j < cs.terms.size(); ++j) {
      const auto between = minimal_normal_over(cs.terms[j], lattice);
      EXPECT_NE(std::find(between.begin(), between.end(), cs.terms[j - 1]), between.end()) << c.label;
      prod *= cs.factor_orders[j - 1];
    }
    EXPECT_EQ(prod, g.order());
  }
}

TEST(NormalLattice, CoreIsLargestNormalInside) {
  const Group g = from_label("S4");
  const auto t = character_table(g);
  const auto lattice = normal_subgroups(g, t);
  for (Element x = 0; x < g.order(); ++x) {
    const Subgroup m = normalizer(g, subgroup_generated(g, std::vector<Element>{x}));
    Subgroup best = Subgroup::trivial(g);
    for (const auto& n : lattice)
      if (n.is_subset_of(m) && n.order() > best.order())
        best = n;
    EXPECT_EQ(core(g, m), best);
  }
}
