#include "charprod/zoo.hpp"

#include "charprod/error.hpp"
#include "charprod/normal_lattice.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <regex>

namespace charprod {

namespace {

unsigned mod_pow(unsigned b, unsigned e, unsigned m) {
  unsigned long long r = 1 % m, x = b % m;
  while (e) {
    if (e & 1)
      r = r * x % m;
    x = x * x % m;
    e >>= 1;
  }
  return static_cast<unsigned>(r);
}

unsigned multiplicative_order(unsigned x, unsigned m) {
  unsigned k = 1;
  unsigned long long y = x % m;
  while (y != 1) {
    y = y * x % m;
    ++k;
    if (k > m)
      return 0;
  }
  return k;
}

void require_prime(unsigned p, const char* what) {
  if (!is_prime_number(p))
    throw PreconditionError(std::string(what) + " must be prime, got " + std::to_string(p));
}

void require_order(std::size_t n, std::size_t cap) {
  if (n > cap)
    throw CapacityError("group order " + std::to_string(n) + " exceeds the cap of " + std::to_string(cap));
}

std::vector<std::vector<unsigned>> cycles_to_images(unsigned degree, const std::vector<std::vector<unsigned>>& cycles) {
  std::vector<unsigned> image(degree);
  std::iota(image.begin(), image.end(), 0u);
  for (const auto& c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i)
      image[c[i]] = c[(i + 1) % c.size()];
  return {image};
}

} // namespace

Group group_from_function(std::size_t n, const std::function<std::size_t(std::size_t, std::size_t)>& mul,
                          std::string label) {
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      table[a * n + b] = static_cast<Element>(mul(a, b));
  return Group(n, std::move(table), std::move(label));
}

Group cyclic(unsigned n) {
  if (n == 0)
    throw PreconditionError("cyclic group order must be positive");
  require_order(n, hard_order_limit);
  return group_from_function(n, [n](std::size_t a, std::size_t b) { return (a + b) % n; }, "C" + std::to_string(n));
}

Group elementary_abelian(unsigned p, unsigned k) {
  require_prime(p, "p");
  std::size_t n = 1;
  for (unsigned i = 0; i < k; ++i) {
    n *= p;
    require_order(n, hard_order_limit);
  }
  auto mul = [p, n](std::size_t a, std::size_t b) {
    std::size_t out = 0, place = 1;
    for (std::size_t m = n; m > 1; m /= p) {
      out += ((a % p + b % p) % p) * place;
      a /= p;
      b /= p;
      place *= p;
    }
    return out;
  };
  return group_from_function(n, mul, "C" + std::to_string(p) + "^" + std::to_string(k));
}

Group dihedral(unsigned n) {
  if (n < 1)
    throw PreconditionError("dihedral group needs n >= 1");
  require_order(2 * std::size_t(n), hard_order_limit);
  // r^i s^j -> i + n j
  auto mul = [n](std::size_t x, std::size_t y) {
    const std::size_t i = x % n, j = x / n, k = y % n, l = y / n;
    const std::size_t rot = j ? (i + n - k) % n : (i + k) % n;
    return rot + n * (j ^ l);
  };
  return group_from_function(2 * std::size_t(n), mul, "D" + std::to_string(n));
}

Group dicyclic(unsigned m) {
  if (m < 1)
    throw PreconditionError("dicyclic group needs m >= 1");
  const std::size_t t = 2 * std::size_t(m);
  require_order(2 * t, hard_order_limit);
  // a^i x^j -> i + 2m j, using x a^k = a^-k x and x^2 = a^m
  auto mul = [m, t](std::size_t u, std::size_t v) {
    const std::size_t i = u % t, j = u / t, k = v % t, l = v / t;
    if (!j)
      return (i + k) % t + t * l;
    if (!l)
      return (i + t - k) % t + t;
    return (i + t - k + m) % t;
  };
  return group_from_function(2 * t, mul, "Dic" + std::to_string(m));
}

Group quaternion(unsigned n) {
  if (n < 8 || (n & (n - 1)) != 0)
    throw PreconditionError("generalized quaternion order must be a power of two >= 8");
  return dicyclic(n / 4).with_label("Q" + std::to_string(n));
}

Group symmetric(unsigned n) {
  if (n < 1)
    throw PreconditionError("symmetric group needs n >= 1");
  if (n > 7)
    throw CapacityError("S" + std::to_string(n) + " exceeds the supported range");
  std::vector<std::vector<unsigned>> gens;
  if (n >= 2) {
    std::vector<unsigned> cycle(n);
    std::iota(cycle.begin(), cycle.end(), 0u);
    gens.push_back(cycles_to_images(n, {cycle})[0]);
    gens.push_back(cycles_to_images(n, {{0, 1}})[0]);
  }
  if (gens.empty())
    return Group().with_label("S1");
  return group_from_permutations(n, gens, "S" + std::to_string(n), hard_order_limit);
}

Group alternating(unsigned n) {
  if (n < 1)
    throw PreconditionError("alternating group needs n >= 1");
  if (n > 7)
    throw CapacityError("A" + std::to_string(n) + " exceeds the supported range");
  if (n < 3)
    return Group().with_label("A" + std::to_string(n));
  std::vector<std::vector<unsigned>> gens;
  for (unsigned k = 2; k < n; ++k)
    gens.push_back(cycles_to_images(n, {{0, 1, k}})[0]);
  return group_from_permutations(n, gens, "A" + std::to_string(n), hard_order_limit);
}

Group direct_product(const Group& a, const Group& b) {
  const std::size_t na = a.order(), nb = b.order();
  require_order(na * nb, hard_order_limit);
  auto mul = [&](std::size_t x, std::size_t y) {
    return a.mul(Element(x % na), Element(y % na)) + na * b.mul(Element(x / na), Element(y / na));
  };
  return group_from_function(na * nb, mul, a.label() + "x" + b.label());
}

Group metacyclic(unsigned n, unsigned m, unsigned r) {
  if (n < 1 || m < 1)
    throw PreconditionError("metacyclic group needs n, m >= 1");
  if (std::gcd(r, n) != 1 || mod_pow(r, m, n) != 1 % n)
    throw PreconditionError("metacyclic group needs r coprime to n with r^m = 1 mod n");
  require_order(std::size_t(n) * m, hard_order_limit);
  std::vector<unsigned> rpow(m);
  for (unsigned j = 0; j < m; ++j)
    rpow[j] = mod_pow(r, j, n);
  // a^i b^j -> i + n j, using b^j a^k = a^(r^j k) b^j
  auto mul = [n, m, &rpow](std::size_t u, std::size_t v) {
    const std::size_t i = u % n, j = u / n, k = v % n, l = v / n;
    return (i + std::size_t(rpow[j]) * k) % n + n * ((j + l) % m);
  };
  return group_from_function(std::size_t(n) * m, mul,
                             "metacyclic:" + std::to_string(n) + ":" + std::to_string(m) + ":" + std::to_string(r));
}

namespace {

Group linear_2_3(bool special) {
  using M = std::array<unsigned, 4>;
  std::vector<M> elems{{1, 0, 0, 1}};
  for (unsigned code = 0; code < 81; ++code) {
    M x{code % 3, code / 3 % 3, code / 9 % 3, code / 27};
    const unsigned det = (x[0] * x[3] + 2 * x[1] * x[2]) % 3;
    if (det == 0 || (special && det != 1) || x == elems[0])
      continue;
    elems.push_back(x);
  }
  std::map<M, std::size_t> index;
  for (std::size_t i = 0; i < elems.size(); ++i)
    index[elems[i]] = i;
  auto mul = [&](std::size_t u, std::size_t v) {
    const M& a = elems[u];
    const M& b = elems[v];
    M c{(a[0] * b[0] + a[1] * b[2]) % 3, (a[0] * b[1] + a[1] * b[3]) % 3, (a[2] * b[0] + a[3] * b[2]) % 3,
        (a[2] * b[1] + a[3] * b[3]) % 3};
    return index.at(c);
  };
  return group_from_function(elems.size(), mul, special ? "SL(2,3)" : "GL(2,3)");
}

} // namespace

Group special_linear_2_3() { return linear_2_3(true); }
Group general_linear_2_3() { return linear_2_3(false); }

Group extraspecial_p3_exp_p(unsigned p) {
  require_prime(p, "p");
  if (p == 2)
    throw PreconditionError("the exponent-p extraspecial group needs an odd prime");
  if (p > 37)
    throw CapacityError("extraspecial group of order p^3 exceeds the table limit");
  const std::size_t q = p;
  auto mul = [q](std::size_t x, std::size_t y) {
    const std::size_t a = x % q, b = x / q % q, c = x / (q * q);
    const std::size_t a2 = y % q, b2 = y / q % q, c2 = y / (q * q);
    return (a + a2) % q + q * ((b + b2) % q) + q * q * ((c + c2 + a * b2) % q);
  };
  Group g = group_from_function(q * q * q, mul, "extraspecial:" + std::to_string(p));
  for (Element x = 1; x < g.order(); ++x)
    if (g.element_order(x) != p)
      throw InvariantError("extraspecial group does not have exponent p");
  return g;
}

namespace {

unsigned frobenius_lambda(unsigned p, unsigned q) {
  for (unsigned l = 2; l < p; ++l)
    if (multiplicative_order(l, p) == q)
      return l;
  throw PreconditionError("no element of order q modulo p");
}

} // namespace

std::size_t frobenius_aE_action(unsigned p, unsigned q, std::size_t e) {
  const std::size_t l = frobenius_lambda(p, q);
  const std::size_t a = e % p, b = e / p % p, c = e / (std::size_t(p) * p);
  return l * a % p + p * (l * b % p) + std::size_t(p) * p * (l * l % p * c % p);
}

Group frobenius_aE(unsigned p, unsigned q) {
  require_prime(p, "p");
  require_prime(q, "q");
  if (p == 2)
    throw PreconditionError("p must be odd");
  if ((p - 1) % q != 0)
    throw PreconditionError("q must divide p - 1");
  if (q == 2)
    throw PreconditionError(
        "no automorphism of order 2 acts fixed-point-freely on the extraspecial group of order p^3: "
        "it would act as -1 on E/Z and hence trivially on Z");
  const Group e = extraspecial_p3_exp_p(p);
  const std::size_t ne = e.order();
  require_order(ne * q, hard_order_limit);

  // sigma^s as a table, s = 0..q-1
  std::vector<std::vector<std::size_t>> act(q, std::vector<std::size_t>(ne));
  for (std::size_t x = 0; x < ne; ++x)
    act[0][x] = x;
  for (unsigned s = 1; s < q; ++s)
    for (std::size_t x = 0; x < ne; ++x)
      act[s][x] = frobenius_aE_action(p, q, act[s - 1][x]);
  for (std::size_t x = 0; x < ne; ++x)
    for (std::size_t y = 0; y < ne; ++y)
      if (act[1][e.mul(Element(x), Element(y))] != e.mul(Element(act[1][x]), Element(act[1][y])))
        throw InvariantError("frobenius_aE action is not an automorphism");
  for (std::size_t x = 1; x < ne; ++x)
    if (act[1][x] == x)
      throw InvariantError("frobenius_aE action has a nontrivial fixed point");

  // (x, s)(y, t) = (x sigma^s(y), s + t), encoded x + |E| s
  auto mul = [&](std::size_t u, std::size_t v) {
    const std::size_t x = u % ne, s = u / ne, y = v % ne, t = v / ne;
    return e.mul(Element(x), Element(act[s][y])) + ne * ((s + t) % q);
  };
  return group_from_function(ne * q, mul, "frobenius:" + std::to_string(p) + ":" + std::to_string(q));
}

namespace {

unsigned parse_number(const std::string& s, std::string_view label) {
  if (s.size() > 6)
    throw ParseError("number too large in group label '" + std::string(label) + "'");
  return static_cast<unsigned>(std::stoul(s));
}

Group power_of(const Group& g, unsigned k, std::string label, std::size_t cap) {
  if (k == 0)
    throw ParseError("exponent must be positive in '" + label + "'");
  std::size_t n = 1;
  for (unsigned i = 0; i < k; ++i) {
    n *= g.order();
    require_order(n, cap);
  }
  Group out = g;
  for (unsigned i = 1; i < k; ++i)
    out = direct_product(out, g);
  return out.with_label(std::move(label));
}

Group factor_from_match(const std::smatch& m, std::string_view label, std::size_t cap) {
  auto num = [&](int i) { return parse_number(m[i].str(), label); };
  if (m[1].matched) {
    const unsigned n = num(1);
    if (n == 0)
      throw ParseError("C0 is not a group");
    require_order(n, cap);
    if (!m[2].matched)
      return cyclic(n);
    const unsigned k = num(2);
    if (is_prime_number(n)) {
      std::size_t order = 1;
      for (unsigned i = 0; i < k; ++i) {
        order *= n;
        require_order(order, cap);
      }
      if (k == 0)
        throw ParseError("exponent must be positive in '" + std::string(label) + "'");
      return elementary_abelian(n, k);
    }
    return power_of(cyclic(n), k, m[0].str(), cap);
  }
  if (m[3].matched) {
    require_order(2 * std::size_t(num(3)), cap);
    return dihedral(num(3));
  }
  if (m[4].matched) {
    require_order(num(4), cap);
    return quaternion(num(4));
  }
  if (m[5].matched) {
    require_order(4 * std::size_t(num(5)), cap);
    return dicyclic(num(5));
  }
  if (m[6].matched) {
    Group g = symmetric(num(6));
    require_order(g.order(), cap);
    return g;
  }
  if (m[7].matched) {
    Group g = alternating(num(7));
    require_order(g.order(), cap);
    return g;
  }
  if (m[8].matched) {
    require_order(24, cap);
    return special_linear_2_3();
  }
  if (m[9].matched) {
    require_order(48, cap);
    return general_linear_2_3();
  }
  if (m[10].matched) {
    const std::size_t p = num(10);
    if (p > 40)
      throw CapacityError("extraspecial group of order p^3 exceeds the table limit");
    require_order(p * p * p, cap);
    return extraspecial_p3_exp_p(num(10));
  }
  if (m[11].matched) {
    const std::size_t p = num(11);
    if (p > 40)
      throw CapacityError("frobenius group exceeds the table limit");
    require_order(p * p * p * num(12), cap);
    return frobenius_aE(num(11), num(12));
  }
  require_order(std::size_t(num(13)) * num(14), cap);
  return metacyclic(num(13), num(14), num(15));
}

} // namespace

Group from_label(std::string_view label, std::size_t cap) {
  static const std::regex factor(
      R"(C(\d+)(?:\^(\d+))?|D(\d+)|Q(\d+)|Dic(\d+)|S(\d+)|A(\d+)|(SL\(2,3\))|(GL\(2,3\))|)"
      R"(extraspecial:(\d+)|frobenius:(\d+):(\d+)|metacyclic:(\d+):(\d+):(\d+))");
  const std::string text(label);
  if (text.empty())
    throw ParseError("empty group label");
  std::vector<Group> factors;
  auto it = text.cbegin();
  while (true) {
    std::smatch m;
    if (!std::regex_search(it, text.cend(), m, factor, std::regex_constants::match_continuous))
      throw ParseError("unknown group label '" + text + "'");
    try {
      factors.push_back(factor_from_match(m, label, cap));
    } catch (const std::out_of_range&) {
      throw ParseError("number out of range in group label '" + text + "'");
    }
    it = m[0].second;
    if (it == text.cend())
      break;
    if (*it != 'x')
      throw ParseError("unknown group label '" + text + "'");
    ++it;
  }
  Group g = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i) {
    require_order(g.order() * factors[i].order(), cap);
    g = direct_product(g, factors[i]);
  }
  return g.with_label(text);
}

namespace {

bool wants(const CorpusSpec& spec, const std::string& family) {
  return spec.families.empty() || spec.families.count(family) > 0;
}

// Invariant factor lists d_1 | d_2 | ... | d_r, r >= 2, product <= max.
void abelian_types(std::size_t max, std::size_t rank_left, std::vector<std::size_t>& cur,
                   std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() >= 2)
    out.push_back(cur);
  if (rank_left == 0)
    return;
  std::size_t prod = 1;
  for (auto d : cur)
    prod *= d;
  const std::size_t start = cur.empty() ? 2 : cur.back();
  for (std::size_t d = start; prod * d <= max; ++d) {
    if (!cur.empty() && d % cur.back() != 0)
      continue;
    cur.push_back(d);
    abelian_types(max, rank_left - 1, cur, out);
    cur.pop_back();
  }
}

std::string abelian_label(const std::vector<std::size_t>& factors) {
  if (std::all_of(factors.begin(), factors.end(), [&](std::size_t d) { return d == factors[0]; }) &&
      is_prime_number(factors[0]))
    return "C" + std::to_string(factors[0]) + "^" + std::to_string(factors.size());
  std::string out;
  for (auto d : factors) {
    if (!out.empty())
      out += 'x';
    out += "C" + std::to_string(d);
  }
  return out;
}

struct Sized {
  std::string label;
  std::size_t order;
};

} // namespace

std::vector<std::string> corpus_labels(const CorpusSpec& spec) {
  const std::size_t max = spec.max_order;
  std::vector<Sized> c;
  if (wants(spec, "cyclic"))
    for (std::size_t n = 1; n <= max; ++n)
      c.push_back({"C" + std::to_string(n), n});
  if (wants(spec, "abelian")) {
    std::vector<std::vector<std::size_t>> types;
    std::vector<std::size_t> cur;
    abelian_types(max, 4, cur, types);
    for (const auto& t : types) {
      std::size_t n = 1;
      for (auto d : t)
        n *= d;
      c.push_back({abelian_label(t), n});
    }
    if (32 <= max)
      c.push_back({"C2^5", 32});
  }
  if (wants(spec, "dihedral"))
    for (std::size_t n = 3; 2 * n <= max; ++n)
      c.push_back({"D" + std::to_string(n), 2 * n});
  if (wants(spec, "quaternion")) {
    for (std::size_t n = 8; n <= max; n *= 2)
      c.push_back({"Q" + std::to_string(n), n});
    for (std::size_t m = 3; 4 * m <= max; ++m)
      if ((m & (m - 1)) != 0)
        c.push_back({"Dic" + std::to_string(m), 4 * m});
  }
  if (wants(spec, "symmetric"))
    for (auto [n, order] : {std::pair{3u, 6u}, {4u, 24u}, {5u, 120u}, {6u, 720u}})
      if (order <= max)
        c.push_back({"S" + std::to_string(n), order});
  if (wants(spec, "alternating"))
    for (auto [n, order] : {std::pair{4u, 12u}, {5u, 60u}, {6u, 360u}})
      if (order <= max)
        c.push_back({"A" + std::to_string(n), order});
  if (wants(spec, "extraspecial"))
    for (std::size_t p : {3, 5, 7})
      if (p * p * p <= max)
        c.push_back({"extraspecial:" + std::to_string(p), p * p * p});
  if (wants(spec, "metacyclic")) {
    const std::array<std::array<unsigned, 3>, 17> list{{{5, 4, 2},
                                                        {7, 3, 2},
                                                        {7, 6, 3},
                                                        {11, 5, 3},
                                                        {11, 10, 2},
                                                        {13, 3, 3},
                                                        {13, 4, 5},
                                                        {13, 6, 4},
                                                        {9, 3, 4},
                                                        {8, 2, 3},
                                                        {8, 2, 5},
                                                        {16, 2, 7},
                                                        {16, 2, 9},
                                                        {4, 4, 3},
                                                        {9, 6, 2},
                                                        {7, 9, 2},
                                                        {5, 8, 2}}};
    for (const auto& [n, m, r] : list)
      if (std::size_t(n) * m <= max)
        c.push_back({"metacyclic:" + std::to_string(n) + ":" + std::to_string(m) + ":" + std::to_string(r),
                     std::size_t(n) * m});
  }
  if (wants(spec, "linear")) {
    if (24 <= max)
      c.push_back({"SL(2,3)", 24});
    if (48 <= max)
      c.push_back({"GL(2,3)", 48});
  }
  if (wants(spec, "products")) {
    const std::vector<Sized> list{{"C2xS3", 12},  {"C3xS3", 18},  {"S3xS3", 36},   {"C2xD4", 16},
                                  {"C2xQ8", 16},  {"C4xD4", 32},  {"C4xQ8", 32},   {"D4xD4", 64},
                                  {"Q8xQ8", 64},  {"D4xQ8", 64},  {"C2xA4", 24},   {"C3xA4", 36},
                                  {"C2xS4", 48},  {"C4xS3", 24},  {"C3xD4", 24},   {"C3xQ8", 24},
                                  {"C5xS3", 30},  {"C2^2xS3", 24}, {"S3xD4", 48},   {"C2xSL(2,3)", 48},
                                  {"C2xA5", 120}, {"C4xS4", 96},  {"C2xextraspecial:3", 54},
                                  {"S3xD5", 60},  {"C3xS4", 72}};
    for (const auto& s : list)
      if (s.order <= max)
        c.push_back(s);
  }
  if (spec.include_named)
    for (const auto& s : std::vector<Sized>{{"A6", 360}, {"extraspecial:5", 125}, {"extraspecial:7", 343},
                                           {"frobenius:7:3", 1029}})
      c.push_back(s);

  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& s : c)
    if (seen.insert(s.label).second)
      out.push_back(s.label);
  return out;
}

std::vector<Group> corpus(const CorpusSpec& spec) {
  std::vector<Group> out;
  for (const auto& label : corpus_labels(spec))
    out.push_back(from_label(label, std::max(spec.max_order, std::size_t(default_order_cap))));
  return out;
}

} // namespace charprod
