#pragma once

#include "charprod/cyclotomic.hpp"
#include "charprod/group.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace charprod {

/// A class function: one value per conjugacy class, in class order.
using ClassFunction = std::vector<Cyc>;

/// One row of a character table.
struct Character {
  std::size_t index = 0;
  ClassFunction values;
  unsigned degree = 1;
};

/// Irr(G) for a finite group, with the class data it is indexed by.
///
/// Rows are sorted by degree and then by their count vectors in descending
/// lexicographic order, which puts the principal character at row 0. Every
/// value is an eigenvalue-multiplicity vector over the exponent-th roots of
/// unity.
struct CharacterTable {
  Classes classes;
  std::size_t group_order = 1;
  unsigned exponent = 1;
  std::vector<Character> rows;
  /// The modular data the table was computed with.
  std::uint64_t prime = 0;
  std::uint64_t root_of_unity = 0;

  std::size_t size() const { return rows.size(); }
  const Character& operator[](std::size_t i) const { return rows[i]; }
  /// Value of a class function at an element (not a class).
  const Cyc& value_at(const ClassFunction& f, Element g) const { return f[classes.class_of[g]]; }
  std::vector<unsigned> degrees() const;
};

/// Smallest prime p with p = 1 (mod e) and p > bound.
std::uint64_t dixon_prime(unsigned e, std::uint64_t bound);

/// Dixon-Schneider: splits the common eigenspaces of the class-constant
/// matrices over GF(p), recovers degrees and values mod p, then lifts each
/// value to its eigenvalue counts. Throws InvariantError if the splitting
/// does not reach one-dimensional spaces.
CharacterTable character_table(const Group& g);

/// [a, b] = (1/|G|) sum_k |C_k| a(g_k) conj(b(g_k)), computed exactly.
/// Throws InvariantError when the result is not a rational integer.
std::int64_t inner_product(const CharacterTable& t, const ClassFunction& a, const ClassFunction& b);

/// Elements where f(g) = f(1). For eigenvalue count vectors this is the
/// test m_0 = degree.
Subgroup kernel(const CharacterTable& t, const ClassFunction& f);
/// Elements where |f(g)| = f(1), tested as f(g) conj(f(g)) = f(1)^2.
Subgroup z_of(const CharacterTable& t, const ClassFunction& f);

/// conj(f)(g) = conj(f(g)); equals f at the inverse class for characters.
ClassFunction conjugate_character(const ClassFunction& f);

ClassFunction principal_character(const CharacterTable& t);

bool values_equal(const ClassFunction& a, const ClassFunction& b);

/// Pulls every irreducible of a quotient G/N back to G and returns, for
/// each quotient row, the matching row index in G's table. Throws
/// InvariantError if a pulled-back character is not a row of `t_g`.
std::vector<std::size_t> lift_from_quotient(const CharacterTable& t_quotient, const std::vector<Element>& projection,
                                            const CharacterTable& t_g);

/// Class function on G obtained by inflating f from the quotient.
ClassFunction inflate(const CharacterTable& t_quotient, const ClassFunction& f,
                      const std::vector<Element>& projection, const CharacterTable& t_g);

/// Table emission: header line, then one row of values per character.
std::string format_table(const CharacterTable& t);

} // namespace charprod
