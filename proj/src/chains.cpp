#include "charprod/chains.hpp"

#include "charprod/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace charprod {

// --- workspace ---------------------------------------------------------------

Workspace::Workspace(Group g) : group_(std::move(g)) {}

const CharacterTable& Workspace::table() {
  if (!table_)
    table_ = character_table(group_);
  return *table_;
}

const std::vector<Subgroup>& Workspace::normal_subgroups() {
  if (!normals_)
    normals_ = charprod::normal_subgroups(group_, table());
  return *normals_;
}

const ChiefSeries& Workspace::chief_series() {
  if (!series_)
    series_ = charprod::chief_series(group_, normal_subgroups());
  return *series_;
}

bool Workspace::solvable() {
  if (!solvable_)
    solvable_ = is_solvable(group_);
  return *solvable_;
}

bool Workspace::supersolvable() { return solvable() && is_supersolvable(chief_series()); }

const View& Workspace::view(const Subgroup& s) {
  auto it = views_.find(s.elements());
  if (it != views_.end())
    return *it->second;
  auto v = std::make_unique<View>();
  if (s.is_whole()) {
    std::vector<Element> identity(group_.order());
    std::iota(identity.begin(), identity.end(), Element(0));
    v->embedded = EmbeddedGroup{s, group_, identity, std::vector<std::int32_t>(identity.begin(), identity.end())};
    v->table = table();
  } else {
    v->embedded = materialize(group_, s);
    v->table = character_table(v->embedded.group);
  }
  return *views_.emplace(s.elements(), std::move(v)).first->second;
}

Workspace::Faithful Workspace::faithful(std::size_t row) {
  const Subgroup k = kernel(table(), table().rows.at(row).values);
  if (k.is_trivial())
    return {this, row, k};
  auto it = quotients_.find(k.elements());
  if (it == quotients_.end()) {
    Quotient q = quotient(group_, k);
    QuotientData d;
    d.ws = std::make_unique<Workspace>(std::move(q.group));
    d.lift = lift_from_quotient(d.ws->table(), q.projection, table());
    it = quotients_.emplace(k.elements(), std::move(d)).first;
  }
  const auto& lift = it->second.lift;
  for (std::size_t i = 0; i < lift.size(); ++i)
    if (lift[i] == row)
      return {it->second.ws.get(), i, k};
  throw InvariantError("character is not inflated from its kernel quotient");
}

Subgroup localize(const View& v, const Subgroup& s) {
  std::vector<Element> out;
  out.reserve(s.order());
  for (Element x : s.elements()) {
    const auto i = v.embedded.from_parent[x];
    if (i < 0)
      throw PreconditionError("subgroup is not contained in the view");
    out.push_back(static_cast<Element>(i));
  }
  std::sort(out.begin(), out.end());
  return Subgroup(v.embedded.group.order(), std::move(out));
}

namespace {

// f, a class function of `from`, restricted to the classes of `to`.
ClassFunction transport(const View& from, const ClassFunction& f, const View& to) {
  ClassFunction out;
  out.reserve(to.table.classes.count());
  for (Element rep : to.table.classes.reps) {
    const auto i = from.embedded.from_parent[to.embedded.to_parent[rep]];
    if (i < 0)
      throw PreconditionError("restriction target is not contained in the source group");
    out.push_back(from.table.value_at(f, static_cast<Element>(i)));
  }
  return out;
}

// A class function of G restricted to the classes of a view.
ClassFunction from_group(Workspace& ws, const ClassFunction& f, const View& to) {
  ClassFunction out;
  out.reserve(to.table.classes.count());
  for (Element rep : to.table.classes.reps)
    out.push_back(ws.table().value_at(f, to.embedded.to_parent[rep]));
  return out;
}

bool proper_subset(const Subgroup& a, const Subgroup& b) { return a.order() < b.order() && a.is_subset_of(b); }

std::string format_set(std::vector<std::int64_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i)
    out += (i ? "," : "") + std::to_string(v[i]);
  return out + "}";
}

std::string format_list(const std::vector<std::int64_t>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i)
    out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

VerificationReport make(const char* check, const ReportContext& ctx, Status s, std::string detail) {
  return VerificationReport{check, ctx.group, ctx.chi, s, std::move(detail)};
}

// Rows j whose kernel is maximal under inclusion among the alpha kernels.
std::vector<std::size_t> maximal_kernel_indices(const CharacterAnalysis& a) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < a.alphas.size(); ++j) {
    bool maximal = true;
    for (std::size_t i = 0; i < a.alphas.size() && maximal; ++i)
      if (proper_subset(a.alpha_kernels[j], a.alpha_kernels[i]))
        maximal = false;
    if (maximal)
      out.push_back(j);
  }
  return out;
}

bool is_faithful(CharacterAnalysis const& a) {
  return kernel(a.ws->table(), a.ws->table().rows[a.row].values).is_trivial();
}

} // namespace

// --- analysis, omega, chains -----------------------------------------------------

CharacterAnalysis analyze(Workspace& ws, std::size_t row) {
  const CharacterTable& t = ws.table();
  CharacterAnalysis a;
  a.ws = &ws;
  a.row = row;
  a.degree = t.rows.at(row).degree;
  a.decomposition = norm_decomposition(t, t.rows[row].values);
  if (a.decomposition.principal_coeff != 1)
    throw InvariantError("principal coefficient of chi*conj(chi) is not 1");
  for (const auto& [r, m] : a.decomposition.constituents) {
    a.alphas.push_back(r);
    a.alpha_kernels.push_back(kernel(t, t.rows[r].values));
  }
  return a;
}

OmegaLattice omega(const Group& g, const std::vector<Subgroup>& alpha_kernels) {
  std::set<Subgroup> members{Subgroup::whole(g)};
  for (const auto& k : alpha_kernels) {
    std::vector<Subgroup> added;
    for (const auto& s : members) {
      Subgroup m = intersect(s, k);
      if (!members.count(m))
        added.push_back(std::move(m));
    }
    members.insert(added.begin(), added.end());
    if (members.size() > omega_capacity)
      throw CapacityError("kernel intersection lattice exceeds " + std::to_string(omega_capacity) + " members");
  }
  OmegaLattice om;
  om.members.assign(members.begin(), members.end());
  om.bottom = om.members.front();
  return om;
}

bool restriction_reducible(Workspace& ws, const Subgroup& n, std::size_t theta, const Subgroup& m) {
  const View& vn = ws.view(n);
  return restricted_norm(vn.table, vn.table.rows[theta].values, localize(vn, m)) != 1;
}

std::vector<std::size_t> restriction_constituents(Workspace& ws, const Subgroup& n, std::size_t theta,
                                                  const Subgroup& m) {
  const View& vn = ws.view(n);
  const View& vm = ws.view(m);
  const ClassFunction res = transport(vn, vn.table.rows[theta].values, vm);
  std::vector<std::size_t> out;
  for (const auto& row : vm.table.rows)
    if (inner_product(vm.table, res, row.values) > 0)
      out.push_back(row.index);
  return out;
}

namespace {

// Members of omega strictly below n on which theta reduces.
std::vector<const Subgroup*> reducing_members(Workspace& ws, const OmegaLattice& om, const ChainStep& step) {
  std::vector<const Subgroup*> out;
  for (const auto& m : om.members)
    if (proper_subset(m, step.n) && restriction_reducible(ws, step.n, step.theta, m))
      out.push_back(&m);
  return out;
}

std::vector<const Subgroup*> maximal_elements(const std::vector<const Subgroup*>& set) {
  std::vector<const Subgroup*> out;
  for (const Subgroup* m : set) {
    bool maximal = true;
    for (const Subgroup* o : set)
      if (proper_subset(*m, *o)) {
        maximal = false;
        break;
      }
    if (maximal)
      out.push_back(m);
  }
  // largest order first, then smallest member list
  std::stable_sort(out.begin(), out.end(),
                   [](const Subgroup* x, const Subgroup* y) { return x->order() > y->order(); });
  return out;
}

} // namespace

std::vector<std::size_t> chain_r(const CharacterAnalysis& a, const Chain& c) {
  std::vector<std::size_t> r;
  for (std::size_t i = 1; i < c.steps.size(); ++i) {
    std::size_t count = 0;
    for (const auto& k : a.alpha_kernels)
      if (c.steps[i].n.is_subset_of(k) && !c.steps[i - 1].n.is_subset_of(k))
        ++count;
    r.push_back(count);
  }
  return r;
}

Chain build_maximal_chain(const CharacterAnalysis& a, const OmegaLattice& om) {
  Workspace& ws = *a.ws;
  Chain c;
  c.steps.push_back({Subgroup::whole(ws.group()), a.row});
  while (true) {
    const auto candidates = maximal_elements(reducing_members(ws, om, c.steps.back()));
    if (candidates.empty())
      break;
    const Subgroup& n = *candidates.front();
    const auto constituents = restriction_constituents(ws, c.steps.back().n, c.steps.back().theta, n);
    if (constituents.empty())
      throw InvariantError("restriction has no irreducible constituent");
    c.steps.push_back({n, constituents.front()});
  }
  c.r = chain_r(a, c);
  return c;
}

std::vector<Chain> all_maximal_chains(const CharacterAnalysis& a, const OmegaLattice& om, std::size_t limit) {
  Workspace& ws = *a.ws;
  std::vector<Chain> out;
  Chain cur;
  cur.steps.push_back({Subgroup::whole(ws.group()), a.row});
  std::function<void()> extend = [&] {
    const auto candidates = maximal_elements(reducing_members(ws, om, cur.steps.back()));
    if (candidates.empty()) {
      if (out.size() >= limit)
        throw CapacityError("more than " + std::to_string(limit) + " maximal chains");
      Chain done = cur;
      done.r = chain_r(a, done);
      out.push_back(std::move(done));
      return;
    }
    for (const Subgroup* n : candidates) {
      const ChainStep prev = cur.steps.back();
      for (std::size_t theta : restriction_constituents(ws, prev.n, prev.theta, *n)) {
        cur.steps.push_back({*n, theta});
        extend();
        cur.steps.pop_back();
      }
    }
  };
  extend();
  return out;
}

Chain conjugate_chain(const CharacterAnalysis& a, const Chain& c, Element g) {
  Workspace& ws = *a.ws;
  const Group& grp = ws.group();
  Chain out;
  out.r = c.r;
  for (const auto& step : c.steps) {
    const View& v = ws.view(step.n);
    const ClassFunction& theta = v.table.rows[step.theta].values;
    ClassFunction moved;
    for (Element rep : v.table.classes.reps) {
      const Element y = grp.conjugate(v.embedded.to_parent[rep], g);
      const auto local = v.embedded.from_parent[y];
      if (local < 0)
        throw PreconditionError("chain member is not normal");
      moved.push_back(v.table.value_at(theta, static_cast<Element>(local)));
    }
    std::optional<std::size_t> found;
    for (const auto& row : v.table.rows)
      if (values_equal(row.values, moved)) {
        found = row.index;
        break;
      }
    if (!found)
      throw InvariantError("conjugate of an irreducible is not a table row");
    out.steps.push_back({step.n, *found});
  }
  return out;
}

std::vector<Subgroup> step_chief_factors(const CharacterAnalysis& a, const Chain& c, std::size_t i) {
  std::vector<Subgroup> out;
  for (auto& l : minimal_normal_over(c.steps[i].n, a.ws->normal_subgroups()))
    if (l.is_subset_of(c.steps[i - 1].n))
      out.push_back(std::move(l));
  return out;
}

std::uint64_t p_max(unsigned n) {
  if (n < 1 || n > 64)
    throw PreconditionError("p_max needs 1 <= n <= 64");
  std::vector<std::uint64_t> p(n + 1, 0);
  for (unsigned m = 1; m <= n; ++m) {
    p[m] = m;
    for (unsigned j = 1; j < m; ++j)
      p[m] = std::max(p[m], j * p[m - j]);
  }
  return p[n];
}

// --- reports ---------------------------------------------------------------------

std::string to_string(Status s) {
  switch (s) {
  case Status::pass:
    return "pass";
  case Status::fail:
    return "fail";
  case Status::hypotheses_not_met:
    return "hypotheses-not-met";
  }
  return "fail";
}

std::string VerificationReport::line() const {
  return check + " group=" + group + " chi=" + std::to_string(chi) + " status=" + to_string(status) +
         " detail=" + detail;
}

VerificationReport verify_lemma_basico1(Workspace& ws, const Subgroup& l, const Subgroup& n, std::size_t theta,
                                        const ReportContext& ctx) {
  const char* check = "lemma-basico1";
  const Group& g = ws.group();
  if (!is_normal(g, l) || !is_normal(g, n) || !proper_subset(n, l))
    return make(check, ctx, Status::hypotheses_not_met, "N < L are not both normal");
  const auto above = minimal_normal_over(n, ws.normal_subgroups());
  if (std::find(above.begin(), above.end(), l) == above.end())
    return make(check, ctx, Status::hypotheses_not_met, "L/N is not a chief factor");
  if (!derived_subgroup(g, l).is_subset_of(n))
    return make(check, ctx, Status::hypotheses_not_met, "L/N is not abelian");

  const View& vl = ws.view(l);
  const CharacterTable& tl = vl.table;
  const ClassFunction& th = tl.rows.at(theta).values;
  for (Element s : g.generators())
    for (std::size_t c = 0; c < tl.classes.count(); ++c) {
      const Element y = g.conjugate(vl.embedded.to_parent[tl.classes.reps[c]], s);
      if (!(tl.value_at(th, static_cast<Element>(vl.embedded.from_parent[y])) == th[c]))
        return make(check, ctx, Status::hypotheses_not_met, "theta is not G-invariant");
    }

  const Subgroup nl = localize(vl, n);
  const bool reducible = restricted_norm(tl, th, nl) != 1;
  bool vanishes = true;
  for (std::size_t c = 0; c < tl.classes.count(); ++c)
    if (!nl.contains(tl.classes.reps[c]) && !th[c].is_zero())
      vanishes = false;
  std::string detail = "|L|=" + std::to_string(l.order()) + " |N|=" + std::to_string(n.order()) +
                       " reducible=" + (reducible ? "yes" : "no") + " vanishes=" + (vanishes ? "yes" : "no");
  if (reducible != vanishes)
    return make(check, ctx, Status::fail, detail + " vanishing criterion disagrees");
  if (!reducible)
    return make(check, ctx, Status::pass, detail);

  // Phi = theta conj(theta) - (1_N)^L
  ClassFunction induced;
  const auto index = static_cast<std::int64_t>(l.order() / n.order());
  for (std::size_t c = 0; c < tl.classes.count(); ++c)
    induced.push_back(Cyc::integer(nl.contains(tl.classes.reps[c]) ? index : 0, tl.exponent));
  const ClassFunction phi = difference(product(th, conjugate_character(th)), induced);
  try {
    decompose(tl, phi);
  } catch (const PreconditionError&) {
    return make(check, ctx, Status::fail, detail + " Phi is not a character");
  }
  Cyc over_n = Cyc::integer(0, tl.exponent);
  for (std::size_t c = 0; c < tl.classes.count(); ++c)
    if (nl.contains(tl.classes.reps[c]))
      over_n += phi[c] * static_cast<std::int64_t>(tl.classes.sizes[c]);
  if (!over_n.is_zero())
    return make(check, ctx, Status::fail, detail + " [Phi_N, 1_N] != 0");
  return make(check, ctx, Status::pass, detail + " Phi is a character with [Phi_N, 1_N]=0");
}

VerificationReport verify_lemma_basicon(Workspace& ws, std::size_t row, const ReportContext& ctx) {
  const CharacterAnalysis a = analyze(ws, row);
  const CharacterTable& t = ws.table();
  std::size_t checked = 0, mismatches = 0;
  for (const auto& n : ws.normal_subgroups()) {
    const bool irreducible = restricted_norm(t, t.rows[row].values, n) == 1;
    bool outside_all = true;
    for (const auto& k : a.alpha_kernels)
      if (n.is_subset_of(k))
        outside_all = false;
    ++checked;
    mismatches += irreducible != outside_all;
  }
  std::string detail = "normal-subgroups=" + std::to_string(checked) + " mismatches=" + std::to_string(mismatches);
  if (!ws.solvable())
    return make("lemma-basicon", ctx, Status::hypotheses_not_met, "group not solvable; " + detail);
  return make("lemma-basicon", ctx, mismatches ? Status::fail : Status::pass, detail);
}

VerificationReport verify_theorem_C(Workspace& ws, std::size_t row, const ReportContext& ctx) {
  const auto f = ws.faithful(row);
  const CharacterAnalysis a = analyze(*f.ws, f.row);
  if (a.degree == 1)
    return make("theorem-C", ctx, Status::hypotheses_not_met, "linear character");
  const auto mult = a.decomposition.multiplicities();
  std::vector<std::int64_t> maximal_mult;
  for (std::size_t j : maximal_kernel_indices(a))
    maximal_mult.push_back(mult[j]);
  const bool maximal_ok =
      std::all_of(maximal_mult.begin(), maximal_mult.end(), [](std::int64_t m) { return m == 1; });
  const bool one_in = std::find(mult.begin(), mult.end(), 1) != mult.end();
  const bool conclusion = maximal_ok && one_in;
  const std::string detail = "{a_i}=" + format_set(mult) + " maximal-kernel-multiplicities=" + format_list(maximal_mult);
  if (!ws.solvable())
    return make("theorem-C", ctx, Status::hypotheses_not_met,
                std::string("hypotheses violated: group not solvable; conclusion ") + (conclusion ? "holds" : "fails") +
                    ": " + detail);
  return make("theorem-C", ctx, conclusion ? Status::pass : Status::fail, detail);
}

VerificationReport verify_lemma_center(Workspace& ws, std::size_t row, const ReportContext& ctx) {
  const auto f = ws.faithful(row);
  const CharacterAnalysis a = analyze(*f.ws, f.row);
  const Group& g = f.ws->group();
  Subgroup bottom = Subgroup::whole(g);
  for (const auto& k : a.alpha_kernels)
    bottom = intersect(bottom, k);
  const Subgroup z = center(g);
  const std::string detail = "|Z|=" + std::to_string(z.order()) + " |kernel-intersection|=" + std::to_string(bottom.order());
  return make("lemma-center", ctx, z == bottom ? Status::pass : Status::fail, detail);
}

VerificationReport verify_theorem_B(Workspace& ws, std::size_t row, const ReportContext& ctx) {
  const auto f = ws.faithful(row);
  const CharacterAnalysis a = analyze(*f.ws, f.row);
  const auto primes = prime_factorization(a.degree);
  auto distinct = primes;
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  const std::size_t n = a.eta();
  std::string detail = "deg=" + std::to_string(a.degree) + " distinct-primes=" + std::to_string(distinct.size()) +
                       " eta=" + std::to_string(n);
  if (!ws.solvable())
    return make("theorem-B", ctx, Status::hypotheses_not_met, "group not solvable; " + detail);
  bool ok = distinct.size() <= n;
  if (f.ws->supersolvable() && a.degree > 1) {
    detail += " supersolvable primes-with-multiplicity=" + std::to_string(primes.size());
    ok = ok && primes.size() + 1 <= n;
  }
  return make("theorem-B", ctx, ok ? Status::pass : Status::fail, detail);
}

VerificationReport verify_supersolvable_bound(Workspace& ws, std::size_t row, const ReportContext& ctx) {
  const auto f = ws.faithful(row);
  const CharacterAnalysis a = analyze(*f.ws, f.row);
  if (a.degree == 1)
    return make("supersolvable-bound", ctx, Status::hypotheses_not_met, "linear character");
  if (!f.ws->supersolvable())
    return make("supersolvable-bound", ctx, Status::hypotheses_not_met, "G/Ker(chi) is not supersolvable");
  const auto dl = derived_length(f.ws->group());
  const std::size_t n = a.eta();
  const std::string detail = "dl=" + std::to_string(*dl) + " eta=" + std::to_string(n) +
                             " bound=" + std::to_string(2 * n - 1);
  return make("supersolvable-bound", ctx, *dl + 1 <= 2 * n ? Status::pass : Status::fail, detail);
}

VerificationReport verify_eta_parity(Workspace& ws, std::size_t row, const ReportContext& ctx) {
  const CharacterAnalysis a = analyze(ws, row);
  const std::size_t n = a.eta();
  std::string detail = "eta=" + std::to_string(n) + " order=" + std::to_string(ws.group().order());
  if (n % 2 == 0)
    return make("eta-parity", ctx, Status::pass, detail + " even");
  const auto real = real_constituent(ws.table(), a.decomposition);
  detail += real ? " real-constituent=" + std::to_string(*real) : " no-real-constituent";
  const bool ok = ws.group().order() % 2 == 0 && real.has_value();
  return make("eta-parity", ctx, ok ? Status::pass : Status::fail, detail);
}

VerificationReport verify_lemma_maximal(const CharacterAnalysis& a, const Chain& c, const ReportContext& ctx) {
  Workspace& ws = *a.ws;
  if (!ws.solvable())
    return make("lemma-maximal", ctx, Status::hypotheses_not_met, "group not solvable");
  if (!is_faithful(a))
    return make("lemma-maximal", ctx, Status::hypotheses_not_met, "character not faithful");
  const std::size_t k = c.k(), n = a.eta();
  std::size_t pairs = 0, bad_a = 0;
  for (std::size_t i = 1; i <= k; ++i)
    for (const auto& m : ws.normal_subgroups())
      if (proper_subset(c.steps[i].n, m) && m.is_subset_of(c.steps[i - 1].n)) {
        ++pairs;
        bad_a += restriction_reducible(ws, c.steps[i - 1].n, c.steps[i - 1].theta, m);
      }
  const bool b = is_abelian(ws.group(), c.steps[k].n);
  const bool cc = k <= n;
  std::string detail = "k=" + std::to_string(k) + " eta=" + std::to_string(n) + " (a)-pairs=" + std::to_string(pairs) +
                       " (a)-failures=" + std::to_string(bad_a) + " N_k-abelian=" + (b ? "yes" : "no");
  bool d = true;
  if (ws.supersolvable() && a.degree > 1) {
    d = k + 1 <= n;
    detail += " supersolvable k<=eta-1 " + std::string(d ? "holds" : "fails");
  }
  return make("lemma-maximal", ctx, (bad_a == 0 && b && cc && d) ? Status::pass : Status::fail, detail);
}

VerificationReport verify_chain_definition(const CharacterAnalysis& a, const OmegaLattice& om, const Chain& c,
                                           const ReportContext& ctx) {
  Workspace& ws = *a.ws;
  auto fail = [&](const std::string& why) { return make("chain-definition", ctx, Status::fail, why); };
  if (!c.steps.front().n.is_whole() || c.steps.front().theta != a.row)
    return fail("chain does not start at (G, chi)");
  for (std::size_t i = 1; i < c.steps.size(); ++i) {
    const ChainStep& prev = c.steps[i - 1];
    const ChainStep& cur = c.steps[i];
    const std::string at = " at step " + std::to_string(i);
    if (std::find(om.members.begin(), om.members.end(), cur.n) == om.members.end())
      return fail("N_i not in Omega" + at);
    if (!proper_subset(cur.n, prev.n))
      return fail("N_i not a proper subgroup of N_{i-1}" + at);
    if (!restriction_reducible(ws, prev.n, prev.theta, cur.n))
      return fail("restriction is irreducible" + at);
    const auto cons = restriction_constituents(ws, prev.n, prev.theta, cur.n);
    if (std::find(cons.begin(), cons.end(), cur.theta) == cons.end())
      return fail("theta_i is not a constituent" + at);
    for (const auto& m : om.members)
      if (proper_subset(cur.n, m) && proper_subset(m, prev.n) && restriction_reducible(ws, prev.n, prev.theta, m))
        return fail("N_i is not maximal" + at);
  }
  const ChainStep& last = c.steps.back();
  for (const auto& m : om.members)
    if (proper_subset(m, last.n) && restriction_reducible(ws, last.n, last.theta, m))
      return fail("chain can be extended");
  if (c.r != chain_r(a, c))
    return fail("r_i do not match their definition");
  return make("chain-definition", ctx, Status::pass,
              "k=" + std::to_string(c.k()) + " omega=" + std::to_string(om.members.size()));
}

namespace {

// Greedy maximal A-invariant proper subgroup of l containing `start`.
Subgroup maximal_invariant_below(const Group& g, const Subgroup& start, const Subgroup& l, const Subgroup& a) {
  Subgroup m = normal_closure(g, a, start.elements());
  bool grown = true;
  while (grown) {
    grown = false;
    for (Element x : l.elements()) {
      if (m.contains(x))
        continue;
      auto gens = generating_set(g, m);
      gens.push_back(x);
      Subgroup cand = normal_closure(g, a, gens);
      if (!(cand == l)) {
        m = std::move(cand);
        grown = true;
        break;
      }
    }
  }
  return m;
}

// C_A(L/N) = {x in A : [x, l] in N for all l in L}
Subgroup centralizer_of_factor(const Group& g, const Subgroup& a, const Subgroup& l, const Subgroup& n) {
  const auto gens = generating_set(g, l);
  std::vector<Element> out;
  for (Element x : a.elements()) {
    bool ok = true;
    for (Element y : gens)
      if (!n.contains(g.commutator(x, y))) {
        ok = false;
        break;
      }
    if (ok)
      out.push_back(x);
  }
  return Subgroup(g.order(), std::move(out));
}

std::vector<std::int64_t> flatten(const ClassFunction& f) {
  std::vector<std::int64_t> out;
  for (const auto& v : f)
    out.insert(out.end(), v.coeffs().begin(), v.coeffs().end());
  return out;
}

struct StepOutcome {
  bool ok = true;
  std::string detail;
};

StepOutcome plusone_step(const CharacterAnalysis& a, const Chain& c, std::size_t i, const Subgroup& l) {
  Workspace& ws = *a.ws;
  const Group& g = ws.group();
  const ChainStep& prev = c.steps[i - 1];
  const ChainStep& cur = c.steps[i];
  const std::size_t r = c.r[i - 1];
  const View& vprev = ws.view(prev.n);
  const View& vl = ws.view(l);
  const CharacterTable& tl = vl.table;
  const ClassFunction psi = transport(vprev, vprev.table.rows[prev.theta].values, vl);
  if (inner_product(tl, psi, psi) != 1)
    return {false, "psi reducible"};

  std::vector<Element> support;
  for (std::size_t cl = 0; cl < tl.classes.count(); ++cl)
    if (!psi[cl].is_zero())
      for (Element x : tl.classes.members[cl])
        support.push_back(vl.embedded.to_parent[x]);
  const Subgroup v = subgroup_generated(g, support);
  const Subgroup nv = join(g, cur.n, v);
  if (!is_normal_in(g, nv, prev.n))
    return {false, "N_i V(psi) not N_{i-1}-invariant"};
  if (nv == l)
    return {false, "N_i V(psi) = L_i"};
  const Subgroup m = maximal_invariant_below(g, nv, l, prev.n);
  if (!(core(g, m) == cur.n))
    return {false, "core_G(M) != N_i"};

  // Irr(L/M)^# and the action of N_G(M) on it
  const Subgroup ml = localize(vl, m);
  std::vector<std::size_t> gammas;
  for (const auto& row : tl.rows)
    if (row.index != 0 && ml.is_subset_of(kernel(tl, row.values)))
      gammas.push_back(row.index);
  if (gammas.empty())
    return {false, "Irr(L_i/M) has no nonprincipal character"};
  std::map<std::vector<std::int64_t>, std::size_t> position;
  for (std::size_t idx = 0; idx < gammas.size(); ++idx)
    position[flatten(tl.rows[gammas[idx]].values)] = idx;
  std::vector<std::size_t> parent(gammas.size());
  std::iota(parent.begin(), parent.end(), std::size_t(0));
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  const Subgroup h = normalizer(g, m);
  for (Element s : generating_set(g, h)) {
    std::vector<std::size_t> moved_class(tl.classes.count());
    for (std::size_t cl = 0; cl < tl.classes.count(); ++cl)
      moved_class[cl] = tl.classes.class_of[vl.embedded.from_parent[g.conjugate(
          vl.embedded.to_parent[tl.classes.reps[cl]], s)]];
    for (std::size_t idx = 0; idx < gammas.size(); ++idx) {
      const ClassFunction& gam = tl.rows[gammas[idx]].values;
      ClassFunction moved;
      for (std::size_t cl = 0; cl < tl.classes.count(); ++cl)
        moved.push_back(gam[moved_class[cl]]);
      auto it = position.find(flatten(moved));
      if (it == position.end())
        return {false, "N_G(M) does not permute Irr(L_i/M)"};
      parent[find(idx)] = find(it->second);
    }
  }
  std::size_t orbits = 0;
  for (std::size_t idx = 0; idx < gammas.size(); ++idx)
    orbits += find(idx) == idx;

  std::size_t x_count = 0;
  for (std::size_t j : a.alphas) {
    const ClassFunction res = from_group(ws, ws.table().rows[j].values, vl);
    for (std::size_t gi : gammas)
      if (inner_product(tl, res, tl.rows[gi].values) != 0) {
        ++x_count;
        break;
      }
  }

  const Subgroup cz = centralizer_of_factor(g, prev.n, l, cur.n);
  const auto dl_top = relative_derived_length(g, prev.n, cur.n);
  const auto dl_c = relative_derived_length(g, prev.n, cz);
  const bool c_abelian = derived_subgroup(g, cz).is_subset_of(cur.n);

  std::string detail = "step=" + std::to_string(i) + " |L|=" + std::to_string(l.order()) +
                       " |M|=" + std::to_string(m.order()) + " orbits=" + std::to_string(orbits) +
                       " |X|=" + std::to_string(x_count) + " r=" + std::to_string(r) +
                       " dl(N_{i-1}/N_i)=" + (dl_top ? std::to_string(*dl_top) : "inf") +
                       " dl(N_{i-1}/C)=" + (dl_c ? std::to_string(*dl_c) : "inf");
  bool ok = orbits <= x_count && x_count <= r && l.is_subset_of(cz) && c_abelian && dl_top && dl_c &&
            *dl_top <= *dl_c + 1;
  return {ok, detail};
}

// Subgroups U with n <= U < l, sorted by (order, members).
std::vector<Subgroup> intermediate_subgroups(const Group& g, const Subgroup& n, const Subgroup& l) {
  std::set<Subgroup> found{n};
  std::vector<Subgroup> queue{n};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const Subgroup s = queue[qi];
    auto gens = generating_set(g, s);
    for (Element x : l.elements()) {
      if (s.contains(x))
        continue;
      auto with = gens;
      with.push_back(x);
      Subgroup t = subgroup_generated(g, with);
      if (t == l || found.count(t))
        continue;
      found.insert(t);
      queue.push_back(std::move(t));
    }
  }
  return {found.begin(), found.end()};
}

StepOutcome uinthemiddle_step(const CharacterAnalysis& a, const Chain& c, std::size_t i, const Subgroup& l) {
  Workspace& ws = *a.ws;
  const Group& g = ws.group();
  const ChainStep& prev = c.steps[i - 1];
  const ChainStep& cur = c.steps[i];
  const View& vprev = ws.view(prev.n);
  const View& vl = ws.view(l);
  const View& vn = ws.view(cur.n);
  const CharacterTable& tl = vl.table;
  const ClassFunction psi = transport(vprev, vprev.table.rows[prev.theta].values, vl);
  if (inner_product(tl, psi, psi) != 1)
    return {false, "psi reducible"};
  const ClassFunction& theta = vn.table.rows[cur.theta].values;
  const auto l_gens = generating_set(g, l);

  for (const Subgroup& u : intermediate_subgroups(g, cur.n, l)) {
    const View& vu = ws.view(u);
    const CharacterTable& tu = vu.table;
    const ClassFunction psi_u = transport(vl, psi, vu);
    for (const auto& phi : tu.rows) {
      if (inner_product(tu, psi_u, phi.values) == 0)
        continue;
      if (inner_product(vn.table, transport(vu, phi.values, vn), theta) == 0)
        continue;
      auto fixes = [&](Element s) {
        for (std::size_t cl = 0; cl < tu.classes.count(); ++cl) {
          const Element y = g.conjugate(vu.embedded.to_parent[tu.classes.reps[cl]], s);
          if (!(tu.value_at(phi.values, static_cast<Element>(vu.embedded.from_parent[y])) == phi.values[cl]))
            return false;
        }
        return true;
      };
      if (std::all_of(l_gens.begin(), l_gens.end(), fixes))
        continue;
      std::size_t stab = 0;
      bool vanishes = true;
      for (Element x : l.elements()) {
        if (fixes(x)) {
          ++stab;
          continue;
        }
        if (!tl.value_at(psi, static_cast<Element>(vl.embedded.from_parent[x])).is_zero())
          vanishes = false;
      }
      std::string detail = "step=" + std::to_string(i) + " |U|=" + std::to_string(u.order()) +
                           " |stabilizer|=" + std::to_string(stab) + " |L|=" + std::to_string(l.order());
      if (!vanishes)
        return {false, detail + " psi does not vanish off the stabilizer"};
      return {true, detail};
    }
  }
  return {false, "step=" + std::to_string(i) + " no U with a non-invariant phi"};
}

VerificationReport chain_steps_report(const char* check, const CharacterAnalysis& a, const Chain& c,
                                      const ReportContext& ctx,
                                      const std::function<StepOutcome(std::size_t, const Subgroup&)>& step,
                                      std::string extra, bool extra_ok) {
  Workspace& ws = *a.ws;
  if (!ws.solvable())
    return make(check, ctx, Status::hypotheses_not_met, "group not solvable");
  if (!is_faithful(a))
    return make(check, ctx, Status::hypotheses_not_met, "character not faithful");
  if (c.k() == 0)
    return make(check, ctx, extra_ok ? Status::pass : Status::fail, "k=0 vacuous" + extra);
  std::size_t instances = 0, failures = 0;
  std::string first_fail, first;
  for (std::size_t i = 1; i <= c.k(); ++i) {
    const auto ls = step_chief_factors(a, c, i);
    if (ls.empty())
      return make(check, ctx, Status::fail, "no chief factor L_i/N_i below N_{i-1} at step " + std::to_string(i));
    for (const auto& l : ls) {
      const StepOutcome o = step(i, l);
      ++instances;
      if (first.empty())
        first = o.detail;
      if (!o.ok) {
        ++failures;
        if (first_fail.empty())
          first_fail = o.detail;
      }
    }
  }
  std::string detail = "k=" + std::to_string(c.k()) + " instances=" + std::to_string(instances) +
                       " failures=" + std::to_string(failures) + " " + (failures ? first_fail : first) + extra;
  return make(check, ctx, (failures == 0 && extra_ok) ? Status::pass : Status::fail, detail);
}

} // namespace

VerificationReport verify_plusone_steps(const CharacterAnalysis& a, const Chain& c, const ReportContext& ctx) {
  const std::size_t n = a.eta();
  std::size_t sum = 0;
  std::uint64_t prod = 1;
  for (std::size_t r : c.r) {
    sum += r;
    prod *= r;
  }
  bool ok = sum <= n;
  std::string extra = " sum-r=" + std::to_string(sum) + " prod-r=" + std::to_string(prod);
  if (c.k() > 0 && n >= 1) {
    const std::uint64_t bound = n <= 64 ? (std::uint64_t(1) << (n - 1)) : UINT64_MAX;
    const std::uint64_t pm = n <= 64 ? p_max(static_cast<unsigned>(n)) : UINT64_MAX;
    ok = ok && prod <= pm && prod <= bound;
    extra += " p(eta)=" + std::to_string(pm);
  } else if (c.k() > 0) {
    ok = false;
  }
  return chain_steps_report(
      "plusone-steps", a, c, ctx, [&](std::size_t i, const Subgroup& l) { return plusone_step(a, c, i, l); }, extra,
      ok);
}

VerificationReport verify_lemma_uinthemiddle(const CharacterAnalysis& a, const Chain& c, const ReportContext& ctx) {
  return chain_steps_report(
      "lemma-uinthemiddle", a, c, ctx, [&](std::size_t i, const Subgroup& l) { return uinthemiddle_step(a, c, i, l); },
      "", true);
}

namespace {

VerificationReport combine(const char* check, const ReportContext& ctx, const std::vector<VerificationReport>& parts,
                           const std::string& prefix) {
  std::size_t pass = 0, fail = 0, hnm = 0;
  const VerificationReport* first_fail = nullptr;
  for (const auto& p : parts) {
    if (p.status == Status::pass)
      ++pass;
    else if (p.status == Status::fail) {
      ++fail;
      if (!first_fail)
        first_fail = &p;
    } else
      ++hnm;
  }
  if (parts.size() == 1)
    return make(check, ctx, parts[0].status, prefix + parts[0].detail);
  const Status s = fail ? Status::fail : pass ? Status::pass : Status::hypotheses_not_met;
  std::string detail = prefix + "instances=" + std::to_string(parts.size()) + " pass=" + std::to_string(pass) +
                       " fail=" + std::to_string(fail) + " hypotheses-not-met=" + std::to_string(hnm);
  if (first_fail)
    detail += " first-failure: " + first_fail->detail;
  else if (!parts.empty())
    detail += " " + parts[0].detail;
  return make(check, ctx, s, detail);
}

VerificationReport basico1_in_theorem_C_setting(Workspace& ws, std::size_t row, const ReportContext& ctx) {
  const char* check = "lemma-basico1";
  const auto f = ws.faithful(row);
  Workspace& fw = *f.ws;
  const CharacterAnalysis a = analyze(fw, f.row);
  if (a.degree == 1)
    return make(check, ctx, Status::hypotheses_not_met, "linear character");
  if (!fw.solvable())
    return make(check, ctx, Status::hypotheses_not_met, "group not solvable");
  std::vector<VerificationReport> parts;
  std::set<Subgroup> seen;
  for (std::size_t j : maximal_kernel_indices(a)) {
    const Subgroup& n = a.alpha_kernels[j];
    if (!seen.insert(n).second)
      continue;
    for (const auto& l : minimal_normal_over(n, fw.normal_subgroups())) {
      const View& vl = fw.view(l);
      const ClassFunction res = from_group(fw, fw.table().rows[f.row].values, vl);
      std::optional<std::size_t> theta;
      for (const auto& r : vl.table.rows)
        if (inner_product(vl.table, res, r.values) == 1 && inner_product(vl.table, res, res) == 1)
          theta = r.index;
      if (!theta) {
        parts.push_back(make(check, ctx, Status::fail, "chi_L reducible for a chief factor over a maximal kernel"));
        continue;
      }
      parts.push_back(verify_lemma_basico1(fw, l, n, *theta, ctx));
    }
  }
  return combine(check, ctx, parts, "L=chief factor over maximal Ker(alpha_j), theta=chi_L; ");
}

} // namespace

std::vector<VerificationReport> verify_character(Workspace& ws, std::size_t row, const VerifyOptions& opts) {
  const ReportContext ctx{ws.group().label(), row};
  std::vector<VerificationReport> out;
  out.push_back(basico1_in_theorem_C_setting(ws, row, ctx));
  out.push_back(verify_lemma_basicon(ws, row, ctx));
  out.push_back(verify_theorem_C(ws, row, ctx));
  out.push_back(verify_lemma_center(ws, row, ctx));

  const auto f = ws.faithful(row);
  Workspace& fw = *f.ws;
  const CharacterAnalysis a = analyze(fw, f.row);
  std::vector<Chain> chains;
  std::optional<OmegaLattice> om;
  std::string chain_problem;
  if (!fw.solvable()) {
    chain_problem = "group not solvable";
  } else {
    try {
      om = omega(fw.group(), a.alpha_kernels);
      if (opts.exhaustive_chains && fw.group().order() <= exhaustive_chain_order_limit)
        chains = all_maximal_chains(a, *om);
      else
        chains.push_back(build_maximal_chain(a, *om));
    } catch (const CapacityError& e) {
      chain_problem = e.what();
    }
  }
  auto chain_check = [&](const char* check, const std::function<VerificationReport(const Chain&)>& run) {
    if (!chain_problem.empty())
      return make(check, ctx, Status::hypotheses_not_met, chain_problem);
    std::vector<VerificationReport> parts;
    for (const auto& c : chains)
      parts.push_back(run(c));
    return combine(check, ctx, parts, chains.size() > 1 ? "chains=" + std::to_string(chains.size()) + " " : "");
  };

  out.push_back(chain_check("lemma-maximal", [&](const Chain& c) { return verify_lemma_maximal(a, c, ctx); }));
  out.push_back(verify_theorem_B(ws, row, ctx));
  out.push_back(verify_supersolvable_bound(ws, row, ctx));
  out.push_back(chain_check("plusone-steps", [&](const Chain& c) { return verify_plusone_steps(a, c, ctx); }));
  out.push_back(
      chain_check("lemma-uinthemiddle", [&](const Chain& c) { return verify_lemma_uinthemiddle(a, c, ctx); }));
  out.push_back(
      chain_check("chain-definition", [&](const Chain& c) { return verify_chain_definition(a, *om, c, ctx); }));
  out.push_back(verify_eta_parity(ws, row, ctx));
  return out;
}

} // namespace charprod
