#include "oracles.hpp"

#include "charprod/char_algebra.hpp"
#include "charprod/error.hpp"
#include "charprod/zoo.hpp"

#include <gtest/gtest.h>

using namespace charprod;

namespace {

const std::vector<std::string> kSample = {"C1", "C7", "C2^3", "S3", "D4", "Q8", "A4", "Dic3", "S4",
                                          "A5", "SL(2,3)", "GL(2,3)", "extraspecial:3", "metacyclic:13:4:5",
                                          "C3xS3", "C4xQ8"};

std::vector<std::int64_t> ints(const ClassFunction& f) {
  std::vector<std::int64_t> out;
  for (const auto& v : f)
    out.push_back(*v.as_integer());
  return out;
}

} // namespace

TEST(DixonPrime, SmallestAdmissible) {
  EXPECT_EQ(dixon_prime(6, 12), 13u);
  EXPECT_EQ(dixon_prime(60, 720), 1021u);
  EXPECT_EQ(dixon_prime(2, 2), 3u);
  for (unsigned e : {1u, 4u, 12u, 30u}) {
    const auto p = dixon_prime(e, 100);
    EXPECT_GT(p, 100u);
    EXPECT_EQ(p % e, 1u % e);
    for (std::uint64_t q = 101; q < p; ++q)
      if (q % e == 1 % e) {
        bool prime = q > 1;
        for (std::uint64_t d = 2; d * d <= q; ++d)
          prime = prime && q % d;
        EXPECT_FALSE(prime) << q;
      }
  }
}

TEST(CharacterTable, KnownSmallTables) {
  const auto s3 = character_table(from_label("S3"));
  ASSERT_EQ(s3.size(), 3u);
  EXPECT_EQ(ints(s3[0].values), (std::vector<std::int64_t>{1, 1, 1}));
  EXPECT_EQ(ints(s3[1].values), (std::vector<std::int64_t>{1, 1, -1}));
  EXPECT_EQ(ints(s3[2].values), (std::vector<std::int64_t>{2, -1, 0}));
  EXPECT_EQ(s3.prime, 13u);

  const auto a6 = character_table(from_label("A6"));
  EXPECT_EQ(a6.degrees(), (std::vector<unsigned>{1, 5, 5, 8, 8, 9, 10}));
  EXPECT_EQ(a6.prime, 1021u);

  const auto a5 = character_table(from_label("A5"));
  EXPECT_EQ(a5.degrees(), (std::vector<unsigned>{1, 3, 3, 4, 5}));
  // the two degree-3 characters take the golden-ratio values
  std::size_t irrational = 0;
  for (const auto& v : a5[1].values)
    irrational += !v.as_integer().has_value();
  EXPECT_EQ(irrational, 2u);
}

TEST(CharacterTable, RowOrthogonalityElementwise) {
  for (const auto& label : kSample) {
    const Group g = from_label(label);
    const auto t = character_table(g);
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t j = 0; j < t.size(); ++j) {
        const Cyc s = oracle::elementwise_pairing(t, t[i].values, t[j].values);
        EXPECT_EQ(s, Cyc::integer(i == j ? std::int64_t(g.order()) : 0)) << label << " " << i << " " << j;
      }
  }
}

TEST(CharacterTable, ColumnOrthogonality) {
  for (const auto& label : kSample) {
    const Group g = from_label(label);
    const auto t = character_table(g);
    for (std::size_t a = 0; a < t.classes.count(); ++a)
      for (std::size_t b = 0; b < t.classes.count(); ++b) {
        Cyc s = Cyc::integer(0, t.exponent);
        for (const auto& row : t.rows)
          s += row.values[a] * row.values[b].conj();
        const auto expect = a == b ? std::int64_t(oracle::centralizer_order(g, t.classes.reps[a])) : 0;
        EXPECT_EQ(s, Cyc::integer(expect)) << label;
      }
  }
}

TEST(CharacterTable, StructuralAxioms) {
  for (const auto& label : kSample) {
    const Group g = from_label(label);
    const auto t = character_table(g);
    EXPECT_EQ(t.size(), t.classes.count());
    std::size_t sum = 0;
    for (const auto& row : t.rows) {
      sum += std::size_t(row.degree) * row.degree;
      EXPECT_EQ(g.order() % row.degree, 0u);
      EXPECT_EQ(row.values[0], Cyc::integer(row.degree));
      for (const auto& v : row.values) {
        EXPECT_TRUE(v.is_count_vector());
        EXPECT_EQ(v.coefficient_sum(), row.degree);
      }
    }
    EXPECT_EQ(sum, g.order());
    for (const auto& v : t[0].values)
      EXPECT_EQ(v, Cyc::integer(1));
    for (std::size_t i = 1; i < t.size(); ++i)
      EXPECT_LE(t[i - 1].degree, t[i].degree);
  }
}

// Coset actions give permutation characters; together with the regular
// character they must decompose with non-negative integer multiplicities.
TEST(CharacterTable, PermutationCharactersDecompose) {
  for (const char* label : {"S4", "A5", "S5", "A6", "GL(2,3)"}) {
    const Group g = from_label(label);
    const auto t = character_table(g);
    ClassFunction regular(t.classes.count(), Cyc::integer(0));
    regular[0] = Cyc::integer(std::int64_t(g.order()));
    const Decomposition d = decompose(t, regular);
    for (std::size_t i = 0; i < t.size(); ++i)
      EXPECT_EQ(d.coeffs[i], t[i].degree) << label;

    for (Element h : g.generators()) {
      const Subgroup s = subgroup_generated(g, std::vector<Element>{h});
      // fixed cosets of g on G/S: #{x : x^-1 g x in S} / |S|
      ClassFunction fixed;
      for (Element rep : t.classes.reps) {
        std::size_t n = 0;
        for (Element x = 0; x < g.order(); ++x)
          n += s.contains(g.mul(g.mul(g.inv(x), rep), x));
        fixed.push_back(Cyc::integer(std::int64_t(n / s.order())));
      }
      const Decomposition p = decompose(t, fixed);
      EXPECT_EQ(p.principal_coeff, 1) << label;
    }
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t j = 0; j < t.size(); ++j)
        EXPECT_NO_THROW(decompose(t, product(t[i].values, t[j].values))) << label;
  }
}

TEST(CharacterTable, KernelsAndCentres) {
  for (const auto& label : kSample) {
    const Group g = from_label(label);
    const auto t = character_table(g);
    for (const auto& row : t.rows) {
      std::vector<Element> ker, z;
      for (Element x = 0; x < g.order(); ++x) {
        const Cyc& v = t.value_at(row.values, x);
        if (v == Cyc::integer(row.degree))
          ker.push_back(x);
        if (v * v.conj() == Cyc::integer(std::int64_t(row.degree) * row.degree))
          z.push_back(x);
      }
      EXPECT_EQ(kernel(t, row.values).elements(), ker) << label;
      EXPECT_EQ(z_of(t, row.values).elements(), z) << label;
      EXPECT_TRUE(is_normal(g, kernel(t, row.values)));
    }
  }
}

TEST(CharacterTable, QuotientLiftIsInflation) {
  for (const char* label : {"S4", "SL(2,3)", "D4xQ8", "C3xS3"}) {
    const Group g = from_label(label);
    const auto t = character_table(g);
    const Subgroup d = derived_subgroup(g, Subgroup::whole(g));
    const Quotient q = quotient(g, d);
    const auto tq = character_table(q.group);
    const auto lift = lift_from_quotient(tq, q.projection, t);
    ASSERT_EQ(lift.size(), tq.size());
    for (std::size_t i = 0; i < tq.size(); ++i)
      for (Element x = 0; x < g.order(); ++x)
        EXPECT_EQ(t.value_at(t[lift[i]].values, x), tq.value_at(tq[i].values, q.projection[x])) << label;
  }
}

TEST(CharacterTable, DeterministicOutput) {
  const Group g = from_label("GL(2,3)");
  EXPECT_EQ(format_table(character_table(g)), format_table(character_table(g)));
}
