#pragma once

#include "charprod/group.hpp"

#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace charprod {

/// Builds the table of an n-element group from its multiplication; element
/// 0 must be the identity.
Group group_from_function(std::size_t n, const std::function<std::size_t(std::size_t, std::size_t)>& mul,
                          std::string label);

Group cyclic(unsigned n);
Group elementary_abelian(unsigned p, unsigned k);
/// Dihedral group of order 2n.
Group dihedral(unsigned n);
/// Dicyclic group of order 4m: a^(2m) = 1, x^2 = a^m, x a x^-1 = a^-1.
/// Generalized quaternion when 4m is a power of two.
Group dicyclic(unsigned m);
/// Generalized quaternion group of order n, a power of two >= 8.
Group quaternion(unsigned n);
Group symmetric(unsigned n);
Group alternating(unsigned n);
Group direct_product(const Group& a, const Group& b);
/// C_n semidirect C_m with b a b^-1 = a^r; needs r^m = 1 (mod n).
Group metacyclic(unsigned n, unsigned m, unsigned r);
Group special_linear_2_3();
Group general_linear_2_3();

/// Heisenberg group over GF(p), p odd: (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab').
Group extraspecial_p3_exp_p(unsigned p);

/// <t> E where E is the extraspecial group of order p^3 and exponent p and
/// t of prime order q acts by (a,b,c) -> (la, lb, l^2 c), l of order q mod p.
/// Fixed-point freeness is checked on every element of E. For q = 2 no
/// fixed-point-free automorphism of order 2 exists (the only candidate on
/// E/Z is -1, which centralizes Z), so q = 2 throws PreconditionError.
Group frobenius_aE(unsigned p, unsigned q);

/// The action used by frobenius_aE on the element (a,b,c) of E, encoded
/// a + p b + p^2 c.
std::size_t frobenius_aE_action(unsigned p, unsigned q, std::size_t e);

/// Parses labels such as C12, C2^3, D4, Q8, Dic3, S4, A6, SL(2,3), GL(2,3),
/// extraspecial:3, frobenius:7:3, metacyclic:7:3:2 and products joined by
/// 'x', e.g. C2xS3. Throws ParseError on anything else.
Group from_label(std::string_view label, std::size_t cap = default_order_cap);

struct CorpusSpec {
  std::size_t max_order = 128;
  /// Empty means every family: cyclic, abelian, dihedral, quaternion,
  /// symmetric, alternating, extraspecial, metacyclic, linear, products.
  std::set<std::string> families;
  bool include_named = true;  ///< A6, extraspecial:5, extraspecial:7, frobenius:7:3
};

std::vector<std::string> corpus_labels(const CorpusSpec& spec);
std::vector<Group> corpus(const CorpusSpec& spec);

} // namespace charprod
