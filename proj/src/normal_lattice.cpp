#include "charprod/normal_lattice.hpp"

#include "charprod/error.hpp"

#include <algorithm>
#include <set>

namespace charprod {

std::vector<Subgroup> normal_subgroups(const Group& g, const CharacterTable& t) {
  std::set<Subgroup> found{Subgroup::whole(g)};
  for (const auto& row : t.rows) {
    const Subgroup k = kernel(t, row.values);
    if (found.count(k))
      continue;
    std::vector<Subgroup> added;
    for (const auto& s : found) {
      Subgroup m = intersect(s, k);
      if (!found.count(m))
        added.push_back(std::move(m));
    }
    found.insert(added.begin(), added.end());
  }
  return {found.begin(), found.end()};
}

std::vector<Subgroup> minimal_normal_over(const Subgroup& n, const std::vector<Subgroup>& lattice) {
  std::vector<const Subgroup*> above;
  for (const auto& l : lattice)
    if (l.order() > n.order() && n.is_subset_of(l))
      above.push_back(&l);
  std::vector<Subgroup> out;
  for (const Subgroup* l : above) {
    bool minimal = true;
    for (const Subgroup* m : above)
      if (m->order() < l->order() && m->is_subset_of(*l)) {
        minimal = false;
        break;
      }
    if (minimal)
      out.push_back(*l);
  }
  return out;
}

ChiefSeries chief_series(const Group& g, const std::vector<Subgroup>& lattice) {
  std::vector<Subgroup> up{Subgroup::trivial(g)};
  while (!up.back().is_whole()) {
    auto next = minimal_normal_over(up.back(), lattice);
    if (next.empty())
      throw InvariantError("normal subgroup lattice does not reach the whole group");
    up.push_back(std::move(next.front()));
  }
  ChiefSeries s;
  s.terms.assign(up.rbegin(), up.rend());
  for (std::size_t j = 1; j < s.terms.size(); ++j) {
    const std::size_t f = s.terms[j - 1].order() / s.terms[j].order();
    s.factor_orders.push_back(f);
    s.factor_is_prime.push_back(is_prime_number(f));
  }
  return s;
}

bool is_solvable(const Group& g) { return derived_length(g).has_value(); }

bool is_supersolvable(const ChiefSeries& series) {
  return std::all_of(series.factor_is_prime.begin(), series.factor_is_prime.end(), [](bool b) { return b; });
}

Subgroup core(const Group& g, const Subgroup& m) {
  Subgroup c = m;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Element s : g.generators()) {
      Subgroup next = intersect(c, conjugate(g, c, s));
      if (next.order() != c.order()) {
        c = std::move(next);
        changed = true;
      }
    }
  }
  return c;
}

bool is_prime_number(std::size_t n) {
  if (n < 2)
    return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

std::vector<std::size_t> prime_factorization(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t d = 2; d * d <= n; ++d)
    while (n % d == 0) {
      out.push_back(d);
      n /= d;
    }
  if (n > 1)
    out.push_back(n);
  return out;
}

} // namespace charprod
