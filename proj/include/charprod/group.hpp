#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace charprod {

/// Index of a group element; 0 is always the identity.
using Element = std::uint32_t;

inline constexpr std::size_t default_order_cap = 5040;

/// Largest order representable by the packed multiplication table.
inline constexpr std::size_t hard_order_limit = 65535;

/// Permutation generators a group was built from. Images are 0-based.
struct PermPresentation {
  unsigned degree = 0;
  std::vector<std::vector<unsigned>> generators;
};

/// A finite group stored as its complete multiplication table.
///
/// Construction validates the table: entries in range, element 0 is a
/// two-sided identity, every row and column is a permutation, and the
/// operation is associative (Light's test over a generating set, which is
/// exact). Element orders, inverses, the exponent and a small generating
/// set are precomputed; the object is immutable afterwards.
class Group {
public:
  /// The trivial group.
  Group();

  /// `table` is row-major: table[g * order + h] = g * h.
  Group(std::size_t order, std::vector<Element> table, std::string label);

  std::size_t order() const { return order_; }
  Element mul(Element a, Element b) const { return table_[std::size_t(a) * order_ + b]; }
  Element inv(Element a) const { return inverse_[a]; }
  unsigned element_order(Element a) const { return element_order_[a]; }
  unsigned exponent() const { return exponent_; }
  const std::string& label() const { return label_; }

  /// Greedy generating set (each generator lies outside the subgroup
  /// generated by its predecessors).
  const std::vector<Element>& generators() const { return generators_; }

  const std::optional<PermPresentation>& perm_presentation() const { return perm_; }

  Element power(Element g, long long k) const;
  /// g x g^-1
  Element conjugate(Element x, Element g) const { return mul(mul(g, x), inv(g)); }
  /// x y x^-1 y^-1
  Element commutator(Element x, Element y) const { return mul(mul(x, y), mul(inv(x), inv(y))); }

  Group with_label(std::string label) const;
  Group with_perm_presentation(PermPresentation perm) const;

  /// Associativity checked on all order^3 triples.
  bool is_associative_exhaustive() const;

private:
  std::size_t order_ = 1;
  std::vector<std::uint16_t> table_;
  std::vector<Element> inverse_;
  std::vector<unsigned> element_order_;
  unsigned exponent_ = 1;
  std::vector<Element> generators_;
  std::string label_;
  std::optional<PermPresentation> perm_;
};

/// A subgroup as a set of element indices of its parent group.
///
/// Holds a sorted member list and a bitset over the parent's index space.
/// The constructor does not check closure; operations in this header only
/// ever produce genuine subgroups. Ordering is by (order, member list),
/// which is the deterministic tie-break used throughout the library.
class Subgroup {
public:
  Subgroup() = default;
  Subgroup(std::size_t parent_order, std::vector<Element> elements);

  static Subgroup whole(const Group& g);
  static Subgroup trivial(const Group& g);

  std::size_t order() const { return elements_.size(); }
  std::size_t parent_order() const { return parent_order_; }
  bool contains(Element g) const { return (bits_[g >> 6] >> (g & 63)) & 1u; }
  const std::vector<Element>& elements() const { return elements_; }
  bool is_subset_of(const Subgroup& other) const;
  bool is_whole() const { return elements_.size() == parent_order_; }
  bool is_trivial() const { return elements_.size() == 1; }

  bool operator==(const Subgroup& other) const { return elements_ == other.elements_; }
  std::strong_ordering operator<=>(const Subgroup& other) const;

private:
  std::size_t parent_order_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<Element> elements_;
};

Subgroup intersect(const Subgroup& a, const Subgroup& b);

/// Conjugacy classes. Class 0 is {identity}; the remaining classes are
/// ordered by (size, smallest member).
struct Classes {
  std::vector<Element> reps;            ///< smallest member of each class
  std::vector<std::size_t> sizes;
  std::vector<std::uint32_t> class_of;  ///< element -> class index
  std::vector<std::size_t> inverse_class;
  std::vector<std::vector<Element>> members;

  std::size_t count() const { return reps.size(); }
};

struct Quotient {
  Group group;
  /// element of the parent -> coset index in `group`
  std::vector<Element> projection;
};

/// A subgroup re-materialized as a standalone group. Element i of `group`
/// is to_parent[i] in the parent; from_parent is -1 off the subgroup.
struct EmbeddedGroup {
  Subgroup subgroup;
  Group group;
  std::vector<Element> to_parent;
  std::vector<std::int32_t> from_parent;
};

// --- construction and I/O -------------------------------------------------

/// Parses the `.perm` or `.cayley` text format.
Group load_group(std::string_view text, std::size_t cap = default_order_cap);

/// Enumerates the group generated by permutations of {0..degree-1}.
/// Products compose left to right: (g*h)(x) = h(g(x)).
Group group_from_permutations(unsigned degree, const std::vector<std::vector<unsigned>>& gens,
                              std::string label, std::size_t cap = default_order_cap);

std::string to_cayley_text(const Group& g);

// --- structure ------------------------------------------------------------

Classes conjugacy_classes(const Group& g);

Subgroup subgroup_generated(const Group& g, std::span<const Element> gens);
Subgroup join(const Group& g, const Subgroup& a, const Subgroup& b);
/// Smallest subgroup containing `elems` that is normalized by `ambient`.
Subgroup normal_closure(const Group& g, const Subgroup& ambient, std::span<const Element> elems);
std::vector<Element> generating_set(const Group& g, const Subgroup& s);

Subgroup center(const Group& g);
Subgroup centralizer(const Group& g, const Subgroup& s);
Subgroup normalizer(const Group& g, const Subgroup& s);
Subgroup conjugate(const Group& g, const Subgroup& s, Element by);

bool is_normal(const Group& g, const Subgroup& s);
/// s is normalized by every element of `ambient`.
bool is_normal_in(const Group& g, const Subgroup& s, const Subgroup& ambient);
bool is_abelian(const Group& g, const Subgroup& s);

Subgroup derived_subgroup(const Group& g, const Subgroup& s);
/// s = s^(0) > s^(1) > ... until the series stabilizes.
std::vector<Subgroup> derived_series(const Group& g, const Subgroup& s);
/// nullopt when the derived series stops above the trivial subgroup.
std::optional<unsigned> derived_length(const Group& g);
/// Derived length of a/b for b normal in a: least d with a^(d) <= b.
std::optional<unsigned> relative_derived_length(const Group& g, const Subgroup& a, const Subgroup& b);

/// Throws PreconditionError when n is not normal.
Quotient quotient(const Group& g, const Subgroup& n);
EmbeddedGroup materialize(const Group& g, const Subgroup& s);

} // namespace charprod
