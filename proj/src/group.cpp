#include "charprod/group.hpp"

#include "charprod/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace charprod {

namespace {

std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

// Right-multiplication closure of {identity} under `gens`.
std::vector<char> right_closure(std::size_t n, const std::vector<std::uint16_t>& table,
                                const std::vector<Element>& gens) {
  std::vector<char> seen(n, 0);
  std::vector<Element> queue{0};
  seen[0] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Element s : gens) {
      Element y = table[std::size_t(queue[i]) * n + s];
      if (!seen[y]) {
        seen[y] = 1;
        queue.push_back(y);
      }
    }
  }
  return seen;
}

} // namespace

Group::Group() : order_(1), table_{0}, inverse_{0}, element_order_{1}, exponent_(1), label_("C1") {}

Group::Group(std::size_t order, std::vector<Element> table, std::string label)
    : order_(order), label_(std::move(label)) {
  if (order == 0)
    throw ParseError("group order must be positive");
  if (order > hard_order_limit)
    throw CapacityError("group order " + std::to_string(order) + " exceeds the table limit");
  if (table.size() != order * order)
    throw ParseError("multiplication table has the wrong size");

  const std::size_t n = order;
  table_.resize(n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    if (table[i] >= n)
      throw ParseError("multiplication table entry out of range");
    table_[i] = static_cast<std::uint16_t>(table[i]);
  }
  for (std::size_t g = 0; g < n; ++g) {
    if (table_[g] != g || table_[g * n] != g)
      throw ParseError("element 0 is not a two-sided identity");
  }

  // Latin square: every row and column a permutation.
  std::vector<std::uint32_t> stamp(n, 0);
  std::uint32_t epoch = 0;
  for (std::size_t g = 0; g < n; ++g) {
    ++epoch;
    for (std::size_t h = 0; h < n; ++h) {
      auto v = table_[g * n + h];
      if (stamp[v] == epoch)
        throw ParseError("row " + std::to_string(g) + " is not a permutation");
      stamp[v] = epoch;
    }
  }
  for (std::size_t h = 0; h < n; ++h) {
    ++epoch;
    for (std::size_t g = 0; g < n; ++g) {
      auto v = table_[g * n + h];
      if (stamp[v] == epoch)
        throw ParseError("column " + std::to_string(h) + " is not a permutation");
      stamp[v] = epoch;
    }
  }

  // Greedy generators: right-closure from the identity covers everything.
  std::vector<char> covered(n, 0);
  covered[0] = 1;
  for (Element g = 0; g < n; ++g) {
    if (covered[g])
      continue;
    generators_.push_back(g);
    covered = right_closure(n, table_, generators_);
  }

  // Light's associativity test: the set of g with (ab)g = a(bg) for all a, b
  // is closed under products, so checking a generating set suffices.
  for (Element s : generators_) {
    for (std::size_t a = 0; a < n; ++a) {
      const std::uint16_t* row_a = &table_[a * n];
      for (std::size_t b = 0; b < n; ++b) {
        if (table_[std::size_t(row_a[b]) * n + s] != row_a[table_[b * n + s]])
          throw ParseError("multiplication table is not associative");
      }
    }
  }

  inverse_.assign(n, 0);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) {
      if (table_[g * n + h] == 0) {
        inverse_[g] = static_cast<Element>(h);
        break;
      }
    }
  }

  element_order_.assign(n, 1);
  exponent_ = 1;
  for (std::size_t g = 1; g < n; ++g) {
    unsigned k = 1;
    Element x = static_cast<Element>(g);
    while (x != 0) {
      x = table_[std::size_t(x) * n + g];
      ++k;
    }
    element_order_[g] = k;
    exponent_ = std::lcm(exponent_, k);
  }
}

Element Group::power(Element g, long long k) const {
  long long o = element_order_[g];
  k %= o;
  if (k < 0)
    k += o;
  Element r = 0;
  for (long long i = 0; i < k; ++i)
    r = mul(r, g);
  return r;
}

Group Group::with_label(std::string label) const {
  Group copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

Group Group::with_perm_presentation(PermPresentation perm) const {
  Group copy = *this;
  copy.perm_ = std::move(perm);
  return copy;
}

bool Group::is_associative_exhaustive() const {
  const std::size_t n = order_;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Element ab = mul(Element(a), Element(b));
      for (std::size_t c = 0; c < n; ++c)
        if (mul(ab, Element(c)) != mul(Element(a), mul(Element(b), Element(c))))
          return false;
    }
  return true;
}

// --- Subgroup ---------------------------------------------------------------

Subgroup::Subgroup(std::size_t parent_order, std::vector<Element> elements)
    : parent_order_(parent_order), bits_(words_for(parent_order), 0), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  for (Element g : elements_) {
    if (g >= parent_order)
      throw PreconditionError("subgroup element out of range");
    bits_[g >> 6] |= std::uint64_t(1) << (g & 63);
  }
}

Subgroup Subgroup::whole(const Group& g) {
  std::vector<Element> all(g.order());
  std::iota(all.begin(), all.end(), Element(0));
  return Subgroup(g.order(), std::move(all));
}

Subgroup Subgroup::trivial(const Group& g) { return Subgroup(g.order(), {0}); }

bool Subgroup::is_subset_of(const Subgroup& other) const {
  if (elements_.size() > other.elements_.size())
    return false;
  for (std::size_t w = 0; w < bits_.size(); ++w)
    if (bits_[w] & ~other.bits_[w])
      return false;
  return true;
}

std::strong_ordering Subgroup::operator<=>(const Subgroup& other) const {
  if (auto c = elements_.size() <=> other.elements_.size(); c != 0)
    return c;
  return elements_ <=> other.elements_;
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  std::vector<Element> out;
  const auto& small = a.order() <= b.order() ? a : b;
  const auto& large = a.order() <= b.order() ? b : a;
  for (Element g : small.elements())
    if (large.contains(g))
      out.push_back(g);
  return Subgroup(a.parent_order(), std::move(out));
}

// --- generation ---------------------------------------------------------------

namespace {

// Closure of `start` (already a subgroup, as a membership mask plus list)
// under right multiplication by `gens`.
void extend_closure(const Group& g, std::vector<char>& member, std::vector<Element>& list,
                    const std::vector<Element>& gens) {
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (Element s : gens) {
      Element y = g.mul(list[i], s);
      if (!member[y]) {
        member[y] = 1;
        list.push_back(y);
      }
    }
  }
}

struct Builder {
  const Group& g;
  std::vector<char> member;
  std::vector<Element> list{0};
  std::vector<Element> gens;

  explicit Builder(const Group& grp) : g(grp), member(grp.order(), 0) { member[0] = 1; }

  bool add(Element x) {
    if (member[x])
      return false;
    gens.push_back(x);
    extend_closure(g, member, list, gens);
    return true;
  }

  Subgroup result() const { return Subgroup(g.order(), list); }
};

} // namespace

Subgroup subgroup_generated(const Group& g, std::span<const Element> gens) {
  Builder b(g);
  for (Element x : gens) {
    if (x >= g.order())
      throw PreconditionError("generator index out of range");
    b.add(x);
  }
  return b.result();
}

Subgroup join(const Group& g, const Subgroup& a, const Subgroup& b) {
  Builder bld(g);
  for (Element x : generating_set(g, a))
    bld.add(x);
  for (Element x : generating_set(g, b))
    bld.add(x);
  return bld.result();
}

std::vector<Element> generating_set(const Group& g, const Subgroup& s) {
  Builder b(g);
  for (Element x : s.elements()) {
    b.add(x);
    if (b.list.size() == s.order())
      break;
  }
  return b.gens;
}

Subgroup normal_closure(const Group& g, const Subgroup& ambient, std::span<const Element> elems) {
  const auto amb = generating_set(g, ambient);
  Builder b(g);
  for (Element x : elems)
    b.add(x);
  bool changed = true;
  while (changed) {
    changed = false;
    // Conjugates of the current generators by ambient generators.
    const auto current = b.gens;
    for (Element h : current)
      for (Element a : amb)
        changed |= b.add(g.conjugate(h, a));
  }
  return b.result();
}

// --- structure ----------------------------------------------------------------

Classes conjugacy_classes(const Group& g) {
  const std::size_t n = g.order();
  const auto& gens = g.generators();
  std::vector<std::int64_t> cls(n, -1);
  std::vector<std::vector<Element>> orbits;
  for (Element x = 0; x < n; ++x) {
    if (cls[x] >= 0)
      continue;
    std::vector<Element> orbit{x};
    cls[x] = std::int64_t(orbits.size());
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (Element s : gens) {
        Element y = g.conjugate(orbit[i], s);
        if (cls[y] < 0) {
          cls[y] = cls[x];
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  // Orbit 0 is {identity}; order the rest by (size, smallest member).
  std::stable_sort(orbits.begin() + 1, orbits.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size())
      return a.size() < b.size();
    return a.front() < b.front();
  });

  Classes c;
  c.class_of.assign(n, 0);
  for (std::size_t k = 0; k < orbits.size(); ++k) {
    c.reps.push_back(orbits[k].front());
    c.sizes.push_back(orbits[k].size());
    for (Element x : orbits[k])
      c.class_of[x] = static_cast<std::uint32_t>(k);
  }
  c.members = std::move(orbits);
  c.inverse_class.resize(c.count());
  for (std::size_t k = 0; k < c.count(); ++k)
    c.inverse_class[k] = c.class_of[g.inv(c.reps[k])];
  return c;
}

Subgroup center(const Group& g) { return centralizer(g, Subgroup::whole(g)); }

Subgroup centralizer(const Group& g, const Subgroup& s) {
  const auto gens = generating_set(g, s);
  std::vector<Element> out;
  for (Element x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (Element h : gens)
      if (g.mul(x, h) != g.mul(h, x)) {
        ok = false;
        break;
      }
    if (ok)
      out.push_back(x);
  }
  return Subgroup(g.order(), std::move(out));
}

Subgroup normalizer(const Group& g, const Subgroup& s) {
  const auto gens = generating_set(g, s);
  std::vector<Element> out;
  for (Element x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (Element h : gens)
      if (!s.contains(g.conjugate(h, x))) {
        ok = false;
        break;
      }
    if (ok)
      out.push_back(x);
  }
  return Subgroup(g.order(), std::move(out));
}

Subgroup conjugate(const Group& g, const Subgroup& s, Element by) {
  std::vector<Element> out;
  out.reserve(s.order());
  for (Element x : s.elements())
    out.push_back(g.conjugate(x, by));
  return Subgroup(g.order(), std::move(out));
}

bool is_normal_in(const Group& g, const Subgroup& s, const Subgroup& ambient) {
  const auto sg = generating_set(g, s);
  for (Element a : generating_set(g, ambient))
    for (Element h : sg)
      if (!s.contains(g.conjugate(h, a)))
        return false;
  return true;
}

bool is_normal(const Group& g, const Subgroup& s) {
  const auto sg = generating_set(g, s);
  for (Element a : g.generators())
    for (Element h : sg)
      if (!s.contains(g.conjugate(h, a)))
        return false;
  return true;
}

bool is_abelian(const Group& g, const Subgroup& s) {
  const auto gens = generating_set(g, s);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (g.mul(gens[i], gens[j]) != g.mul(gens[j], gens[i]))
        return false;
  return true;
}

Subgroup derived_subgroup(const Group& g, const Subgroup& s) {
  // Normal closure in s of the commutators of a generating set of s.
  const auto gens = generating_set(g, s);
  std::vector<Element> comms;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      comms.push_back(g.commutator(gens[i], gens[j]));
  return normal_closure(g, s, comms);
}

std::vector<Subgroup> derived_series(const Group& g, const Subgroup& s) {
  std::vector<Subgroup> series{s};
  while (true) {
    Subgroup next = derived_subgroup(g, series.back());
    if (next == series.back())
      break;
    series.push_back(std::move(next));
  }
  return series;
}

std::optional<unsigned> derived_length(const Group& g) {
  return relative_derived_length(g, Subgroup::whole(g), Subgroup::trivial(g));
}

std::optional<unsigned> relative_derived_length(const Group& g, const Subgroup& a, const Subgroup& b) {
  Subgroup cur = a;
  unsigned d = 0;
  while (!cur.is_subset_of(b)) {
    Subgroup next = derived_subgroup(g, cur);
    if (next == cur)
      return std::nullopt;
    cur = std::move(next);
    ++d;
  }
  return d;
}

Quotient quotient(const Group& g, const Subgroup& n) {
  if (!is_normal(g, n))
    throw PreconditionError("quotient: subgroup is not normal");
  const std::size_t order = g.order();
  constexpr Element unset = ~Element(0);
  std::vector<Element> proj(order, unset);
  std::vector<Element> reps;
  for (Element x = 0; x < order; ++x) {
    if (proj[x] != unset)
      continue;
    Element id = static_cast<Element>(reps.size());
    reps.push_back(x);
    for (Element m : n.elements())
      proj[g.mul(x, m)] = id;
  }
  const std::size_t q = reps.size();
  std::vector<Element> table(q * q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j)
      table[i * q + j] = proj[g.mul(reps[i], reps[j])];
  std::string label = g.label() + "/N" + std::to_string(n.order());
  return Quotient{Group(q, std::move(table), std::move(label)), std::move(proj)};
}

EmbeddedGroup materialize(const Group& g, const Subgroup& s) {
  const auto& elems = s.elements();
  const std::size_t m = elems.size();
  std::vector<std::int32_t> from(g.order(), -1);
  for (std::size_t i = 0; i < m; ++i)
    from[elems[i]] = static_cast<std::int32_t>(i);
  std::vector<Element> table(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      auto v = from[g.mul(elems[i], elems[j])];
      if (v < 0)
        throw PreconditionError("materialize: element set is not closed");
      table[i * m + j] = static_cast<Element>(v);
    }
  std::string label = g.label() + "|sub" + std::to_string(m);
  return EmbeddedGroup{s, Group(m, std::move(table), std::move(label)), elems, std::move(from)};
}

} // namespace charprod
