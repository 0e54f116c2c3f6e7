#pragma once

// Brute-force reference implementations. They deliberately avoid the
// library's algorithms (Dixon-Schneider, class-weighted sums, lattice
// folding) and work element by element.

#include "charprod/char_table.hpp"
#include "charprod/group.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

using charprod::Cyc;
using charprod::Element;
using charprod::Group;

inline std::vector<Element> closure(const Group& g, std::vector<Element> gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<Element> out{0};
  in[0] = 1;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (Element s : gens) {
      const Element y = g.mul(out[i], s);
      if (!in[y]) {
        in[y] = 1;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Element> normal_closure(const Group& g, const std::vector<Element>& gens) {
  std::vector<Element> conj;
  for (Element s : gens)
    for (std::size_t x = 0; x < g.order(); ++x)
      conj.push_back(g.mul(g.mul(Element(x), s), g.inv(Element(x))));
  return closure(g, conj);
}

/// Every normal subgroup is the join of the normal closures of its elements,
/// so a breadth-first join over single-element closures reaches all of them.
/// The join of two normal subgroups is their product set.
inline std::set<std::vector<Element>> normal_subgroups(const Group& g) {
  std::set<std::vector<Element>> atom_set;
  for (std::size_t x = 0; x < g.order(); ++x)
    atom_set.insert(normal_closure(g, {Element(x)}));
  const std::vector<std::vector<Element>> atoms(atom_set.begin(), atom_set.end());
  std::set<std::vector<Element>> found{{0}};
  std::vector<std::vector<Element>> queue{{0}};
  std::vector<char> in(g.order());
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& a : atoms) {
      std::fill(in.begin(), in.end(), 0);
      for (Element n : queue[i])
        in[n] = 1;
      if (std::all_of(a.begin(), a.end(), [&](Element x) { return in[x]; }))
        continue;
      for (Element n : queue[i])
        for (Element x : a)
          in[g.mul(n, x)] = 1;
      std::vector<Element> j;
      for (std::size_t x = 0; x < g.order(); ++x)
        if (in[x])
          j.push_back(Element(x));
      if (found.insert(j).second)
        queue.push_back(std::move(j));
    }
  return found;
}

inline std::set<std::vector<Element>> conjugacy_classes(const Group& g) {
  std::set<std::vector<Element>> out;
  for (std::size_t x = 0; x < g.order(); ++x) {
    std::set<Element> orbit;
    for (std::size_t y = 0; y < g.order(); ++y)
      orbit.insert(g.mul(g.mul(Element(y), Element(x)), g.inv(Element(y))));
    out.emplace(orbit.begin(), orbit.end());
  }
  return out;
}

inline std::size_t centralizer_order(const Group& g, Element x) {
  std::size_t n = 0;
  for (std::size_t y = 0; y < g.order(); ++y)
    n += g.mul(x, Element(y)) == g.mul(Element(y), x);
  return n;
}

/// sum over all elements of f(g) conj(h(g)), exactly, without class weights.
inline Cyc elementwise_pairing(const charprod::CharacterTable& t, const charprod::ClassFunction& f,
                               const charprod::ClassFunction& h) {
  Cyc acc = Cyc::integer(0, t.exponent);
  for (std::size_t x = 0; x < t.group_order; ++x)
    acc += t.value_at(f, Element(x)) * t.value_at(h, Element(x)).conj();
  return acc;
}

inline unsigned derived_length(const Group& g) {
  std::vector<Element> cur(g.order());
  for (std::size_t x = 0; x < g.order(); ++x)
    cur[x] = Element(x);
  unsigned dl = 0;
  while (cur.size() > 1) {
    std::vector<Element> comms;
    for (Element x : cur)
      for (Element y : cur)
        comms.push_back(g.commutator(x, y));
    auto next = closure(g, comms);
    if (next.size() == cur.size())
      return ~0u;
    cur = std::move(next);
    ++dl;
  }
  return dl;
}

/// Largest product over all compositions of n, by enumerating them.
inline std::uint64_t max_composition_product(unsigned n) {
  std::uint64_t best = 0;
  // bit i of mask set: a part ends after position i
  for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::uint64_t prod = 1, part = 1;
    for (unsigned i = 0; i + 1 < n; ++i) {
      if (mask >> i & 1) {
        prod *= part;
        part = 1;
      } else {
        ++part;
      }
    }
    best = std::max(best, prod * part);
  }
  return best;
}

} // namespace oracle
