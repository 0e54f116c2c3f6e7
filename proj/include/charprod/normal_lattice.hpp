#pragma once

#include "charprod/char_table.hpp"
#include "charprod/group.hpp"

#include <vector>

namespace charprod {

/// G = K_0 > K_1 > ... > K_m = 1 with every K_{j-1}/K_j a chief factor.
struct ChiefSeries {
  std::vector<Subgroup> terms;
  std::vector<std::size_t> factor_orders;  ///< |K_{j-1} : K_j|
  std::vector<bool> factor_is_prime;
};

/// Every normal subgroup, as the closure of the irreducible kernels under
/// intersection. Sorted by (order, members).
std::vector<Subgroup> normal_subgroups(const Group& g, const CharacterTable& t);

/// Members L of `lattice` with N < L and nothing of the lattice strictly
/// between, in lattice order.
std::vector<Subgroup> minimal_normal_over(const Subgroup& n, const std::vector<Subgroup>& lattice);

/// Built bottom-up from 1 by always taking the first minimal normal
/// subgroup over the current term.
ChiefSeries chief_series(const Group& g, const std::vector<Subgroup>& lattice);

bool is_solvable(const Group& g);

/// Every factor of the given chief series has prime order. By
/// Jordan-Hoelder for chief series this does not depend on the series.
bool is_supersolvable(const ChiefSeries& series);

/// Largest normal subgroup of g inside m.
Subgroup core(const Group& g, const Subgroup& m);

bool is_prime_number(std::size_t n);
/// Prime factors with multiplicity, ascending.
std::vector<std::size_t> prime_factorization(std::size_t n);

} // namespace charprod
