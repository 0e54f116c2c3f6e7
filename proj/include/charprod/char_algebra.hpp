#pragma once

#include "charprod/char_table.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace charprod {

/// A character written in the basis of irreducibles.
struct Decomposition {
  std::vector<std::int64_t> coeffs;  ///< [Theta, chi_i] for every table row
  std::int64_t principal_coeff = 0;
  /// Non-principal constituents (row, multiplicity), in table order.
  std::vector<std::pair<std::size_t, std::int64_t>> constituents;

  std::size_t eta() const { return constituents.size(); }
  std::vector<std::int64_t> multiplicities() const;
};

struct Eta {
  std::size_t n = 0;
  std::vector<std::int64_t> multiplicities;
};

ClassFunction product(const ClassFunction& a, const ClassFunction& b);
ClassFunction sum(const ClassFunction& a, const ClassFunction& b);
ClassFunction difference(const ClassFunction& a, const ClassFunction& b);
ClassFunction scaled(const ClassFunction& a, std::int64_t k);

/// Coefficients [Theta, chi_i] with the reconstruction sum_i c_i chi_i = Theta
/// checked value by value. Throws PreconditionError ("not a character") on a
/// negative coefficient or a failed reconstruction.
Decomposition decompose(const CharacterTable& t, const ClassFunction& theta);

/// Decomposition of chi * conj(chi). The principal coefficient must be 1
/// when chi is irreducible.
Decomposition norm_decomposition(const CharacterTable& t, const ClassFunction& chi);

/// eta(chi) and the multiplicities a_i. Throws PreconditionError unless
/// [chi, chi] = 1.
Eta eta(const CharacterTable& t, const ClassFunction& chi);

bool is_real(const ClassFunction& f);

/// First real-valued non-principal constituent of a decomposition, if any.
std::optional<std::size_t> real_constituent(const CharacterTable& t, const Decomposition& d);

/// "chi=<row> deg=<d> eta=<n> decomp= 1*1 + a1*r1 + ..."
std::string format_decomposition(std::size_t row, unsigned degree, const Decomposition& d);

struct Restriction {
  ClassFunction values;  ///< one value per class of the subgroup's table
  bool normal = false;
  bool irreducible = false;
};

/// Restricts f, a class function of A, to the subgroup h <= A. Both are
/// subgroups of `g`; `a` is nullptr when A is g itself. `t_a` and `t_h` are
/// the standalone tables of A and h.
Restriction restrict_to(const CharacterTable& t_a, const ClassFunction& f, const EmbeddedGroup* a,
                        const EmbeddedGroup& h, const CharacterTable& t_h, const Group& g);

/// Restriction from g to h; throws PreconditionError when h is not normal.
Restriction restrict_to_normal(const CharacterTable& t_g, const ClassFunction& f, const EmbeddedGroup& h,
                               const CharacterTable& t_h, const Group& g);

/// [f_S, f_S]_S for a subgroup S of the group behind `t`, summed over the
/// parent's classes; no table of S is needed.
std::int64_t restricted_norm(const CharacterTable& t, const ClassFunction& f, const Subgroup& s);

/// Frobenius induction from h to its parent:
/// theta^G(g) = sum over h-classes c inside g^G of |C_G(g)| / |C_H(h_c)| * theta(h_c).
ClassFunction induce(const CharacterTable& t_h, const ClassFunction& theta, const EmbeddedGroup& h,
                     const CharacterTable& t_g);

} // namespace charprod
