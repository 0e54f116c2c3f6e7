#include "charprod/char_algebra.hpp"

#include "charprod/error.hpp"

#include <numeric>

namespace charprod {

namespace {

ClassFunction combine(const ClassFunction& a, const ClassFunction& b, bool subtract) {
  if (a.size() != b.size())
    throw PreconditionError("class functions of different lengths");
  ClassFunction out = a;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (subtract)
      out[k] -= b[k];
    else
      out[k] += b[k];
  }
  return out;
}

} // namespace

std::vector<std::int64_t> Decomposition::multiplicities() const {
  std::vector<std::int64_t> out;
  for (const auto& [row, a] : constituents)
    out.push_back(a);
  return out;
}

ClassFunction product(const ClassFunction& a, const ClassFunction& b) {
  if (a.size() != b.size())
    throw PreconditionError("class functions of different lengths");
  ClassFunction out;
  out.reserve(a.size());
  for (std::size_t k = 0; k < a.size(); ++k)
    out.push_back(a[k] * b[k]);
  return out;
}

ClassFunction sum(const ClassFunction& a, const ClassFunction& b) { return combine(a, b, false); }
ClassFunction difference(const ClassFunction& a, const ClassFunction& b) { return combine(a, b, true); }

ClassFunction scaled(const ClassFunction& a, std::int64_t k) {
  ClassFunction out = a;
  for (auto& v : out)
    v *= k;
  return out;
}

Decomposition decompose(const CharacterTable& t, const ClassFunction& theta) {
  Decomposition d;
  d.coeffs.reserve(t.size());
  for (const auto& row : t.rows) {
    const auto c = inner_product(t, theta, row.values);
    if (c < 0)
      throw PreconditionError("not a character: negative multiplicity " + std::to_string(c) + " at row " +
                              std::to_string(row.index));
    d.coeffs.push_back(c);
  }
  for (std::size_t k = 0; k < theta.size(); ++k) {
    Cyc v = Cyc::integer(0, t.exponent);
    for (std::size_t i = 0; i < t.size(); ++i)
      if (d.coeffs[i])
        v += t.rows[i].values[k] * d.coeffs[i];
    if (!(v == theta[k]))
      throw PreconditionError("not a character: irreducible constituents do not reconstruct it");
  }
  d.principal_coeff = d.coeffs.empty() ? 0 : d.coeffs[0];
  for (std::size_t i = 1; i < d.coeffs.size(); ++i)
    if (d.coeffs[i] > 0)
      d.constituents.emplace_back(i, d.coeffs[i]);
  return d;
}

Decomposition norm_decomposition(const CharacterTable& t, const ClassFunction& chi) {
  return decompose(t, product(chi, conjugate_character(chi)));
}

Eta eta(const CharacterTable& t, const ClassFunction& chi) {
  if (inner_product(t, chi, chi) != 1)
    throw PreconditionError("eta is defined for irreducible characters only");
  const auto d = norm_decomposition(t, chi);
  if (d.principal_coeff != 1)
    throw InvariantError("principal coefficient of chi*conj(chi) is not 1");
  return Eta{d.eta(), d.multiplicities()};
}

bool is_real(const ClassFunction& f) {
  for (const auto& v : f)
    if (!(v == v.conj()))
      return false;
  return true;
}

std::optional<std::size_t> real_constituent(const CharacterTable& t, const Decomposition& d) {
  for (const auto& [row, a] : d.constituents)
    if (is_real(t.rows[row].values))
      return row;
  return std::nullopt;
}

std::string format_decomposition(std::size_t row, unsigned degree, const Decomposition& d) {
  std::string out = "chi=" + std::to_string(row) + " deg=" + std::to_string(degree) +
                    " eta=" + std::to_string(d.eta()) + " decomp= " + std::to_string(d.principal_coeff) + "*1";
  for (const auto& [r, a] : d.constituents)
    out += " + " + std::to_string(a) + "*" + std::to_string(r);
  return out;
}

Restriction restrict_to(const CharacterTable& t_a, const ClassFunction& f, const EmbeddedGroup* a,
                        const EmbeddedGroup& h, const CharacterTable& t_h, const Group& g) {
  Restriction r;
  r.values.reserve(t_h.classes.count());
  for (Element rep : t_h.classes.reps) {
    Element x = h.to_parent[rep];
    if (a) {
      const auto ix = a->from_parent[x];
      if (ix < 0)
        throw PreconditionError("restriction target is not contained in the source group");
      x = static_cast<Element>(ix);
    }
    r.values.push_back(t_a.value_at(f, x));
  }
  r.normal = is_normal_in(g, h.subgroup, a ? a->subgroup : Subgroup::whole(g));
  r.irreducible = inner_product(t_h, r.values, r.values) == 1;
  return r;
}

Restriction restrict_to_normal(const CharacterTable& t_g, const ClassFunction& f, const EmbeddedGroup& h,
                               const CharacterTable& t_h, const Group& g) {
  if (!is_normal(g, h.subgroup))
    throw PreconditionError("restriction target is not a normal subgroup");
  return restrict_to(t_g, f, nullptr, h, t_h, g);
}

std::int64_t restricted_norm(const CharacterTable& t, const ClassFunction& f, const Subgroup& s) {
  unsigned e = 1;
  for (const auto& v : f)
    e = std::lcm(e, v.modulus());
  std::vector<std::int64_t> acc(e, 0);
  for (std::size_t k = 0; k < f.size(); ++k) {
    std::int64_t count = 0;
    for (Element x : t.classes.members[k])
      count += s.contains(x);
    if (count)
      accumulate_product_conj(acc, count, f[k], f[k]);
  }
  auto r = reduce_mod_cyclotomic(std::move(acc), e);
  for (std::size_t j = 1; j < r.size(); ++j)
    if (r[j] != 0)
      throw InvariantError("restricted norm is not rational");
  const auto n = static_cast<std::int64_t>(s.order());
  if (r[0] % n != 0)
    throw InvariantError("restricted norm is not an integer");
  return r[0] / n;
}

ClassFunction induce(const CharacterTable& t_h, const ClassFunction& theta, const EmbeddedGroup& h,
                     const CharacterTable& t_g) {
  ClassFunction out(t_g.classes.count(), Cyc::integer(0, t_g.exponent));
  const std::size_t order_h = t_h.group_order;
  for (std::size_t c = 0; c < t_h.classes.count(); ++c) {
    const auto j = t_g.classes.class_of[h.to_parent[t_h.classes.reps[c]]];
    const std::size_t cent_g = t_g.group_order / t_g.classes.sizes[j];
    const std::size_t cent_h = order_h / t_h.classes.sizes[c];
    if (cent_g % cent_h != 0)
      throw InvariantError("centralizer orders are not compatible");
    out[j] += theta[c] * static_cast<std::int64_t>(cent_g / cent_h);
  }
  return out;
}

} // namespace charprod
