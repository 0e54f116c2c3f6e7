#include "charprod/char_table.hpp"

#include "charprod/error.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace charprod {

namespace {

using u64 = std::uint64_t;

struct Fp {
  u64 p;

  u64 add(u64 a, u64 b) const {
    u64 s = a + b;
    return s >= p ? s - p : s;
  }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
  u64 mul(u64 a, u64 b) const { return a * b % p; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    a %= p;
    while (e) {
      if (e & 1)
        r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const {
    if (a % p == 0)
      throw InvariantError("division by zero in GF(p)");
    return pow(a, p - 2);
  }
};

bool is_prime(u64 n) {
  if (n < 2)
    return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d)
      continue;
    out.push_back(d);
    while (n % d == 0)
      n /= d;
  }
  if (n > 1)
    out.push_back(n);
  return out;
}

u64 primitive_root_of_unity(const Fp& f, unsigned e) {
  const auto factors = prime_factors(f.p - 1);
  for (u64 g = 2; g < f.p; ++g) {
    bool generator = true;
    for (u64 q : factors)
      if (f.pow(g, (f.p - 1) / q) == 1) {
        generator = false;
        break;
      }
    if (generator)
      return f.pow(g, (f.p - 1) / e);
  }
  throw InvariantError("GF(p) has no primitive root");
}

using Matrix = std::vector<std::vector<u64>>;

// A subspace of GF(p)^k in reduced row echelon form.
struct Space {
  std::vector<std::vector<u64>> basis;
  std::vector<std::size_t> pivots;
  std::size_t dim() const { return basis.size(); }
};

Space echelon(const Fp& f, std::vector<std::vector<u64>> rows, std::size_t k) {
  Space s;
  std::size_t r = 0;
  for (std::size_t col = 0; col < k && r < rows.size(); ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][col] == 0)
      ++piv;
    if (piv == rows.size())
      continue;
    std::swap(rows[r], rows[piv]);
    const u64 iv = f.inv(rows[r][col]);
    for (auto& x : rows[r])
      x = f.mul(x, iv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0)
        continue;
      const u64 c = rows[i][col];
      for (std::size_t j = 0; j < k; ++j)
        rows[i][j] = f.sub(rows[i][j], f.mul(c, rows[r][j]));
    }
    s.pivots.push_back(col);
    ++r;
  }
  rows.resize(r);
  s.basis = std::move(rows);
  return s;
}

// Null space of a square matrix, one basis vector per free column.
std::vector<std::vector<u64>> nullspace(const Fp& f, Matrix a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < n; ++col) {
    std::size_t piv = r;
    while (piv < n && a[piv][col] == 0)
      ++piv;
    if (piv == n)
      continue;
    std::swap(a[r], a[piv]);
    const u64 iv = f.inv(a[r][col]);
    for (auto& x : a[r])
      x = f.mul(x, iv);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || a[i][col] == 0)
        continue;
      const u64 c = a[i][col];
      for (std::size_t j = col; j < n; ++j)
        a[i][j] = f.sub(a[i][j], f.mul(c, a[r][j]));
    }
    pivot_col.push_back(col);
    ++r;
  }
  std::vector<char> is_pivot(n, 0);
  for (auto c : pivot_col)
    is_pivot[c] = 1;
  std::vector<std::vector<u64>> out;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free])
      continue;
    std::vector<u64> v(n, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
      v[pivot_col[i]] = f.sub(0, a[i][free]);
    out.push_back(std::move(v));
  }
  return out;
}

// Similarity reduction to upper Hessenberg form: h = q^-1 a q.
void hessenberg(const Fp& f, Matrix& h, Matrix& q) {
  const std::size_t n = h.size();
  q.assign(n, std::vector<u64>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    q[i][i] = 1;
  for (std::size_t m = 1; m < n; ++m) {
    std::size_t i = m;
    while (i < n && h[i][m - 1] == 0)
      ++i;
    if (i == n)
      continue;
    if (i != m) {
      std::swap(h[i], h[m]);
      for (std::size_t r = 0; r < n; ++r) {
        std::swap(h[r][i], h[r][m]);
        std::swap(q[r][i], q[r][m]);
      }
    }
    const u64 iv = f.inv(h[m][m - 1]);
    for (std::size_t j = m + 1; j < n; ++j) {
      if (h[j][m - 1] == 0)
        continue;
      const u64 u = f.mul(h[j][m - 1], iv);
      for (std::size_t c = 0; c < n; ++c)
        h[j][c] = f.sub(h[j][c], f.mul(u, h[m][c]));
      for (std::size_t r = 0; r < n; ++r) {
        h[r][m] = f.add(h[r][m], f.mul(u, h[r][j]));
        q[r][m] = f.add(q[r][m], f.mul(u, q[r][j]));
      }
    }
  }
}

// Characteristic polynomial of an upper Hessenberg matrix, constant term
// first. p_m = (x - h_mm) p_{m-1} - sum_i (prod subdiag) h_{m-i,m} p_{m-i-1}
std::vector<u64> charpoly(const Fp& f, const Matrix& h) {
  const std::size_t n = h.size();
  std::vector<std::vector<u64>> p(n + 1);
  p[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<u64> next(m + 1, 0);
    const auto& prev = p[m - 1];
    for (std::size_t j = 0; j < prev.size(); ++j) {
      next[j + 1] = f.add(next[j + 1], prev[j]);
      next[j] = f.sub(next[j], f.mul(h[m - 1][m - 1], prev[j]));
    }
    u64 t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t = f.mul(t, h[m - i][m - i - 1]);
      const u64 c = f.mul(t, h[m - i - 1][m - 1]);
      if (c == 0)
        continue;
      const auto& q = p[m - i - 1];
      for (std::size_t j = 0; j < q.size(); ++j)
        next[j] = f.sub(next[j], f.mul(c, q[j]));
    }
    p[m] = std::move(next);
  }
  return p[n];
}

// Eigenvector of an unreduced Hessenberg matrix, solved upwards from the
// last row with x_{n-1} = 1.
std::vector<u64> hessenberg_eigenvector(const Fp& f, const Matrix& h, u64 lambda) {
  const std::size_t n = h.size();
  std::vector<u64> x(n, 0);
  x[n - 1] = 1;
  for (std::size_t i = n - 1; i >= 1; --i) {
    u64 s = 0;
    for (std::size_t j = i; j < n; ++j) {
      const u64 hij = j == i ? f.sub(h[i][j], lambda) : h[i][j];
      if (hij && x[j])
        s = f.add(s, f.mul(hij, x[j]));
    }
    x[i - 1] = f.mul(f.sub(0, s), f.inv(h[i][i - 1]));
  }
  return x;
}

std::vector<u64> roots(const Fp& f, const std::vector<u64>& poly) {
  std::vector<u64> out;
  for (u64 x = 0; x < f.p; ++x) {
    u64 v = 0;
    for (std::size_t j = poly.size(); j-- > 0;)
      v = f.add(f.mul(v, x), poly[j]);
    if (v == 0)
      out.push_back(x);
  }
  return out;
}

// Class-constant matrix: m[r][l] = #{x in C_j : x^-1 z_l in C_r}.
Matrix class_matrix(const Group& g, const Classes& cls, std::size_t j, const Fp& f) {
  const std::size_t k = cls.count();
  Matrix m(k, std::vector<u64>(k, 0));
  for (std::size_t l = 0; l < k; ++l) {
    const Element z = cls.reps[l];
    for (Element x : cls.members[j])
      m[cls.class_of[g.mul(g.inv(x), z)]][l] += 1;
  }
  for (auto& row : m)
    for (auto& v : row)
      v %= f.p;
  return m;
}

// Splits `w` into simultaneous eigenspaces of `m`.
std::vector<Space> split(const Fp& f, const Matrix& m, const Space& w, std::size_t k) {
  const std::size_t d = w.dim();
  Matrix a(d, std::vector<u64>(d, 0));
  for (std::size_t col = 0; col < d; ++col) {
    const auto& v = w.basis[col];
    for (std::size_t row = 0; row < d; ++row) {
      const auto& mr = m[w.pivots[row]];
      u64 s = 0;
      for (std::size_t l = 0; l < k; ++l)
        if (v[l] && mr[l])
          s = f.add(s, f.mul(mr[l], v[l]));
      a[row][col] = s;
    }
  }
  Matrix h = a, q;
  hessenberg(f, h, q);
  const auto eigen = roots(f, charpoly(f, h));
  if (eigen.size() <= 1)
    return {w};
  bool unreduced = true;
  for (std::size_t i = 1; i < d; ++i)
    unreduced = unreduced && h[i][i - 1] != 0;
  std::vector<Space> out;
  std::size_t total = 0;
  for (u64 lambda : eigen) {
    std::vector<std::vector<u64>> local;
    if (unreduced) {
      const auto y = hessenberg_eigenvector(f, h, lambda);
      std::vector<u64> u(d, 0);
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c)
          if (q[r][c] && y[c])
            u[r] = f.add(u[r], f.mul(q[r][c], y[c]));
      local.push_back(std::move(u));
    } else {
      Matrix shifted = a;
      for (std::size_t i = 0; i < d; ++i)
        shifted[i][i] = f.sub(shifted[i][i], lambda);
      local = nullspace(f, std::move(shifted));
    }
    std::vector<std::vector<u64>> vecs;
    for (const auto& u : local) {
      std::vector<u64> x(k, 0);
      for (std::size_t i = 0; i < d; ++i)
        if (u[i])
          for (std::size_t l = 0; l < k; ++l)
            x[l] = f.add(x[l], f.mul(u[i], w.basis[i][l]));
      vecs.push_back(std::move(x));
    }
    total += vecs.size();
    out.push_back(echelon(f, std::move(vecs), k));
  }
  if (total != d)
    throw InvariantError("class matrix is not diagonalizable over GF(p)");
  return out;
}

u64 isqrt(u64 n) {
  u64 r = static_cast<u64>(std::sqrt(double(n)));
  while (r * r > n)
    --r;
  while ((r + 1) * (r + 1) <= n)
    ++r;
  return r;
}

} // namespace

std::uint64_t dixon_prime(unsigned e, std::uint64_t bound) {
  u64 p = bound / e * e + 1;
  if (p <= bound)
    p += e;
  while (!is_prime(p))
    p += e;
  return p;
}

std::vector<unsigned> CharacterTable::degrees() const {
  std::vector<unsigned> out;
  for (const auto& r : rows)
    out.push_back(r.degree);
  return out;
}

CharacterTable character_table(const Group& g) {
  CharacterTable t;
  t.classes = conjugacy_classes(g);
  t.group_order = g.order();
  t.exponent = g.exponent();
  const Classes& cls = t.classes;
  const std::size_t k = cls.count();
  const unsigned e = t.exponent;

  const Fp f{dixon_prime(e, 2 * u64(g.order()))};
  t.prime = f.p;
  const u64 omega = primitive_root_of_unity(f, e);
  t.root_of_unity = omega;

  // Simultaneous eigenspaces, matrices taken in ascending class order.
  std::vector<std::vector<u64>> unit(k, std::vector<u64>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    unit[i][i] = 1;
  std::vector<Space> spaces{echelon(f, std::move(unit), k)};
  for (std::size_t j = 1; j < k; ++j) {
    if (std::all_of(spaces.begin(), spaces.end(), [](const Space& s) { return s.dim() == 1; }))
      break;
    const Matrix m = class_matrix(g, cls, j, f);
    std::vector<Space> next;
    for (const auto& s : spaces) {
      if (s.dim() == 1) {
        next.push_back(s);
        continue;
      }
      for (auto& piece : split(f, m, s, k))
        next.push_back(std::move(piece));
    }
    spaces = std::move(next);
  }
  if (spaces.size() != k)
    throw InvariantError("eigenspaces of the class matrices did not split completely");

  // Discrete logarithm to base omega on the e-th roots of unity.
  std::vector<std::int64_t> dlog(f.p, -1);
  std::vector<u64> omega_pow(e);
  {
    u64 x = 1;
    for (unsigned j = 0; j < e; ++j) {
      omega_pow[j] = x;
      dlog[x] = j;
      x = f.mul(x, omega);
    }
  }

  // Power maps: classes of g^t for each class representative.
  std::vector<std::vector<std::uint32_t>> power_class(k);
  for (std::size_t l = 0; l < k; ++l) {
    Element x = 0;
    const unsigned o = g.element_order(cls.reps[l]);
    for (unsigned s = 0; s < o; ++s) {
      power_class[l].push_back(cls.class_of[x]);
      x = g.mul(x, cls.reps[l]);
    }
  }

  const u64 order_mod = g.order() % f.p;
  for (const auto& s : spaces) {
    std::vector<u64> v = s.basis[0];
    if (v[0] == 0)
      throw InvariantError("central character vector vanishes at the identity class");
    const u64 scale = f.inv(v[0]);
    for (auto& x : v)
      x = f.mul(x, scale);

    // sum_l w_l w_{l*} / |C_l| = |G| / chi(1)^2
    u64 sum = 0;
    for (std::size_t l = 0; l < k; ++l)
      sum = f.add(sum, f.mul(f.mul(v[l], v[cls.inverse_class[l]]), f.inv(cls.sizes[l] % f.p)));
    const u64 deg_sq = f.mul(order_mod, f.inv(sum));
    const u64 deg = isqrt(deg_sq);
    if (deg * deg != deg_sq || deg_sq > g.order() || g.order() % deg != 0)
      throw InvariantError("recovered degree is not a divisor of the group order");

    std::vector<u64> modval(k);
    for (std::size_t l = 0; l < k; ++l)
      modval[l] = f.mul(f.mul(v[l], deg), f.inv(cls.sizes[l] % f.p));

    Character chi;
    chi.degree = static_cast<unsigned>(deg);
    chi.values.reserve(k);
    for (std::size_t l = 0; l < k; ++l) {
      std::vector<std::int64_t> counts(e, 0);
      if (deg == 1) {
        if (dlog[modval[l]] < 0)
          throw InvariantError("linear character value is not a root of unity mod p");
        counts[dlog[modval[l]]] = 1;
      } else {
        // m_s = (1/o) sum_t chi(g^t) omega_o^(-s t)
        const auto& pc = power_class[l];
        const unsigned o = static_cast<unsigned>(pc.size());
        const unsigned step = e / o;
        const u64 inv_o = f.inv(o);
        std::int64_t total = 0;
        for (unsigned s = 0; s < o; ++s) {
          u64 acc = 0;
          for (unsigned t2 = 0; t2 < o; ++t2) {
            const unsigned idx = (e - (std::uint64_t(s) * t2 % o) * step) % e;
            acc = f.add(acc, f.mul(modval[pc[t2]], omega_pow[idx]));
          }
          acc = f.mul(acc, inv_o);
          if (acc > deg)
            throw InvariantError("eigenvalue multiplicity lift out of range");
          counts[s * step] = static_cast<std::int64_t>(acc);
          total += static_cast<std::int64_t>(acc);
        }
        if (total != static_cast<std::int64_t>(deg))
          throw InvariantError("eigenvalue multiplicities do not sum to the degree");
      }
      chi.values.push_back(Cyc::from_counts(std::move(counts)));
    }
    t.rows.push_back(std::move(chi));
  }

  std::sort(t.rows.begin(), t.rows.end(), [](const Character& a, const Character& b) {
    if (a.degree != b.degree)
      return a.degree < b.degree;
    for (std::size_t l = 0; l < a.values.size(); ++l) {
      const auto& ca = a.values[l].coeffs();
      const auto& cb = b.values[l].coeffs();
      if (ca != cb)
        return cb < ca;
    }
    return false;
  });
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    t.rows[i].index = i;
  return t;
}

std::int64_t inner_product(const CharacterTable& t, const ClassFunction& a, const ClassFunction& b) {
  if (a.size() != t.classes.count() || b.size() != t.classes.count())
    throw PreconditionError("inner_product: class function has the wrong length");
  unsigned e = 1;
  for (std::size_t k = 0; k < a.size(); ++k)
    e = std::lcm(e, std::lcm(a[k].modulus(), b[k].modulus()));
  std::vector<std::int64_t> acc(e, 0);
  for (std::size_t k = 0; k < a.size(); ++k)
    accumulate_product_conj(acc, static_cast<std::int64_t>(t.classes.sizes[k]), a[k], b[k]);
  auto r = reduce_mod_cyclotomic(std::move(acc), e);
  for (std::size_t j = 1; j < r.size(); ++j)
    if (r[j] != 0)
      throw InvariantError("inner product is not rational");
  const auto n = static_cast<std::int64_t>(t.group_order);
  if (r[0] % n != 0)
    throw InvariantError("inner product is not an integer");
  return r[0] / n;
}

Subgroup kernel(const CharacterTable& t, const ClassFunction& f) {
  const Cyc& one = f[0];
  const auto deg = one.as_integer();
  std::vector<Element> out;
  for (std::size_t k = 0; k < f.size(); ++k) {
    bool in;
    if (deg && f[k].is_count_vector() && f[k].coefficient_sum() == *deg)
      in = f[k][0] == *deg;
    else
      in = f[k] == one;
    if (in)
      out.insert(out.end(), t.classes.members[k].begin(), t.classes.members[k].end());
  }
  return Subgroup(t.group_order, std::move(out));
}

Subgroup z_of(const CharacterTable& t, const ClassFunction& f) {
  const Cyc deg_sq = f[0] * f[0].conj();
  std::vector<Element> out;
  for (std::size_t k = 0; k < f.size(); ++k)
    if (f[k] * f[k].conj() == deg_sq)
      out.insert(out.end(), t.classes.members[k].begin(), t.classes.members[k].end());
  return Subgroup(t.group_order, std::move(out));
}

ClassFunction conjugate_character(const ClassFunction& f) {
  ClassFunction out;
  out.reserve(f.size());
  for (const auto& v : f)
    out.push_back(v.conj());
  return out;
}

ClassFunction principal_character(const CharacterTable& t) {
  return ClassFunction(t.classes.count(), Cyc::integer(1, t.exponent));
}

bool values_equal(const ClassFunction& a, const ClassFunction& b) {
  if (a.size() != b.size())
    return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!(a[k] == b[k]))
      return false;
  return true;
}

ClassFunction inflate(const CharacterTable& t_quotient, const ClassFunction& f,
                      const std::vector<Element>& projection, const CharacterTable& t_g) {
  ClassFunction out;
  out.reserve(t_g.classes.count());
  for (Element rep : t_g.classes.reps) {
    const Cyc& v = f[t_quotient.classes.class_of[projection[rep]]];
    out.push_back(t_g.exponent % v.modulus() == 0 ? v.with_modulus(t_g.exponent) : v);
  }
  return out;
}

std::vector<std::size_t> lift_from_quotient(const CharacterTable& t_quotient, const std::vector<Element>& projection,
                                            const CharacterTable& t_g) {
  std::map<std::vector<std::int64_t>, std::size_t> by_counts;
  for (const auto& row : t_g.rows) {
    std::vector<std::int64_t> key;
    for (const auto& v : row.values)
      key.insert(key.end(), v.coeffs().begin(), v.coeffs().end());
    by_counts.emplace(std::move(key), row.index);
  }
  std::vector<std::size_t> out;
  for (const auto& row : t_quotient.rows) {
    ClassFunction pulled = inflate(t_quotient, row.values, projection, t_g);
    std::vector<std::int64_t> key;
    for (const auto& v : pulled)
      key.insert(key.end(), v.coeffs().begin(), v.coeffs().end());
    auto it = by_counts.find(key);
    if (it == by_counts.end() || !values_equal(pulled, t_g.rows[it->second].values))
      throw InvariantError("pulled-back character is not an irreducible row of the group");
    out.push_back(it->second);
  }
  return out;
}

std::string format_table(const CharacterTable& t) {
  std::string out = "irr " + std::to_string(t.size()) + " classes " + std::to_string(t.classes.count()) + " order " +
                    std::to_string(t.group_order) + " exponent " + std::to_string(t.exponent) + "\n";
  for (const auto& row : t.rows) {
    for (std::size_t k = 0; k < row.values.size(); ++k) {
      if (k)
        out += ' ';
      out += row.values[k].to_string();
    }
    out += '\n';
  }
  return out;
}

} // namespace charprod
