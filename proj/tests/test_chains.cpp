#include "oracles.hpp"

#include "charprod/chains.hpp"
#include "charprod/error.hpp"
#include "charprod/zoo.hpp"

#include <gtest/gtest.h>

using namespace charprod;

namespace {

const std::vector<std::string> kSolvable = {"S4", "Q8", "D4xQ8", "SL(2,3)", "GL(2,3)", "extraspecial:3",
                                            "metacyclic:13:4:5", "C2xS4", "S3xD4", "C3xQ8"};

bool same_chain(const Chain& a, const Chain& b) {
  if (a.steps.size() != b.steps.size())
    return false;
  for (std::size_t i = 0; i < a.steps.size(); ++i)
    if (!(a.steps[i].n == b.steps[i].n) || a.steps[i].theta != b.steps[i].theta)
      return false;
  return true;
}

} // namespace

TEST(PMax, MatchesCompositionEnumeration) {
  for (unsigned n = 1; n <= 12; ++n)
    EXPECT_EQ(p_max(n), oracle::max_composition_product(n)) << n;
  for (unsigned n = 1; n <= 20; ++n)
    EXPECT_LE(p_max(n), std::uint64_t(1) << (n - 1)) << n;
  EXPECT_EQ(p_max(2), 2u);
  EXPECT_EQ(p_max(6), 9u);
  EXPECT_THROW(p_max(0), PreconditionError);
}

TEST(Omega, MatchesAllSubsetIntersections) {
  for (const char* label : {"extraspecial:3", "Q8", "S4", "D4xQ8"}) {
    Workspace ws(from_label(label));
    for (std::size_t row = 0; row < ws.table().size(); ++row) {
      const CharacterAnalysis a = analyze(ws, row);
      if (a.eta() > 12)
        continue;
      std::set<std::vector<Element>> brute;
      for (std::uint32_t mask = 0; mask < (1u << a.eta()); ++mask) {
        Subgroup s = Subgroup::whole(ws.group());
        for (std::size_t j = 0; j < a.eta(); ++j)
          if (mask >> j & 1)
            s = intersect(s, a.alpha_kernels[j]);
        brute.insert(s.elements());
      }
      const OmegaLattice om = omega(ws.group(), a.alpha_kernels);
      std::set<std::vector<Element>> got;
      for (const auto& m : om.members)
        got.insert(m.elements());
      EXPECT_EQ(got, brute) << label;
      const auto smallest = std::min_element(brute.begin(), brute.end(),
                                             [](const auto& x, const auto& y) { return x.size() < y.size(); });
      EXPECT_EQ(om.bottom.elements(), *smallest);
    }
  }
}

TEST(Restriction, NormMatchesElementwiseSum) {
  Workspace ws(from_label("GL(2,3)"));
  const auto& t = ws.table();
  for (const auto& m : ws.normal_subgroups())
    for (const auto& row : t.rows) {
      Cyc acc = Cyc::integer(0, t.exponent);
      for (Element x : m.elements())
        acc += t.value_at(row.values, x) * t.value_at(row.values, x).conj();
      EXPECT_EQ(acc, Cyc::integer(restricted_norm(t, row.values, m) * std::int64_t(m.order())));
    }
}

TEST(Chains, BuiltChainsAreMaximal) {
  for (const auto& label : kSolvable) {
    Workspace ws(from_label(label));
    for (std::size_t row = 0; row < ws.table().size(); ++row) {
      const auto f = ws.faithful(row);
      const CharacterAnalysis a = analyze(*f.ws, f.row);
      const OmegaLattice om = omega(f.ws->group(), a.alpha_kernels);
      const Chain c = build_maximal_chain(a, om);
      const auto rep = verify_chain_definition(a, om, c, {label, row});
      EXPECT_EQ(rep.status, Status::pass) << rep.line();
      EXPECT_LE(c.k(), a.eta());
      for (std::size_t r : c.r)
        EXPECT_GE(r, 1u) << label;
    }
  }
}

TEST(Chains, ConjugatedChainsAreMaximalToo) {
  for (const auto& label : kSolvable) {
    Workspace ws(from_label(label));
    for (std::size_t row = 0; row < ws.table().size(); ++row) {
      const auto f = ws.faithful(row);
      const CharacterAnalysis a = analyze(*f.ws, f.row);
      const OmegaLattice om = omega(f.ws->group(), a.alpha_kernels);
      const Chain c = build_maximal_chain(a, om);
      for (Element g : f.ws->group().generators()) {
        const Chain d = conjugate_chain(a, c, g);
        EXPECT_EQ(verify_chain_definition(a, om, d, {label, row}).status, Status::pass) << label;
        EXPECT_EQ(d.r, chain_r(a, d));
      }
    }
  }
}

TEST(Chains, ExhaustiveEnumerationContainsTheBuiltChain) {
  for (const char* label : {"Q8", "D4xQ8", "GL(2,3)", "extraspecial:3"}) {
    Workspace ws(from_label(label));
    for (std::size_t row = 0; row < ws.table().size(); ++row) {
      const auto f = ws.faithful(row);
      const CharacterAnalysis a = analyze(*f.ws, f.row);
      const OmegaLattice om = omega(f.ws->group(), a.alpha_kernels);
      const auto all = all_maximal_chains(a, om);
      const Chain c = build_maximal_chain(a, om);
      std::size_t hits = 0;
      for (const auto& d : all) {
        hits += same_chain(c, d);
        EXPECT_EQ(verify_chain_definition(a, om, d, {label, row}).status, Status::pass);
      }
      EXPECT_EQ(hits, 1u) << label;
    }
  }
}

TEST(Chains, FaithfulCharacterOfCyclicGroupHasEmptyChain) {
  Workspace ws(from_label("C12"));
  for (std::size_t row = 0; row < ws.table().size(); ++row) {
    const auto f = ws.faithful(row);
    const CharacterAnalysis a = analyze(*f.ws, f.row);
    EXPECT_EQ(a.eta(), 0u);
    const OmegaLattice om = omega(f.ws->group(), a.alpha_kernels);
    EXPECT_EQ(om.members.size(), 1u);
    EXPECT_EQ(build_maximal_chain(a, om).k(), 0u);
  }
}

TEST(Verify, AllChecksPassOnSolvableSample) {
  for (const auto& label : kSolvable) {
    Workspace ws(from_label(label));
    for (std::size_t row = 0; row < ws.table().size(); ++row) {
      const auto reports = verify_character(ws, row, {true});
      ASSERT_EQ(reports.size(), 11u);
      EXPECT_EQ(reports.front().check, "lemma-basico1");
      EXPECT_EQ(reports.back().check, "eta-parity");
      for (const auto& r : reports)
        EXPECT_NE(r.status, Status::fail) << r.line();
    }
  }
}

TEST(Verify, A6IsANegativeControl) {
  Workspace ws(from_label("A6"));
  const auto reports = verify_character(ws, 6);
  const auto& c = reports[2];
  ASSERT_EQ(c.check, "theorem-C");
  EXPECT_EQ(c.status, Status::hypotheses_not_met);
  EXPECT_NE(c.detail.find("hypotheses violated"), std::string::npos);
  EXPECT_NE(c.detail.find("conclusion fails"), std::string::npos);
  EXPECT_NE(c.detail.find("{a_i}={2,3}"), std::string::npos);
}

TEST(Verify, BasicoOneOnKnownConfiguration) {
  // Q8 > C4 > Z: the faithful character restricted to C4 is reducible.
  Workspace ws(from_label("Q8"));
  const auto& lattice = ws.normal_subgroups();
  const Subgroup z = center(ws.group());
  for (const auto& l : minimal_normal_over(z, lattice)) {
    const View& v = ws.view(l);
    for (const auto& row : v.table.rows) {
      const auto r = verify_lemma_basico1(ws, l, z, row.index, {"Q8", 0});
      EXPECT_NE(r.status, Status::fail) << r.line();
    }
  }
}
