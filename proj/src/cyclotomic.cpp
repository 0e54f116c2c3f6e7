#include "charprod/cyclotomic.hpp"

#include "charprod/error.hpp"

#include <map>
#include <mutex>
#include <numbers>
#include <numeric>

namespace charprod {

namespace {

int mobius(unsigned n) {
  int mu = 1;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p)
      continue;
    n /= p;
    if (n % p == 0)
      return 0;
    mu = -mu;
  }
  if (n > 1)
    mu = -mu;
  return mu;
}

// Phi_n = prod_{d | n} (x^d - 1)^{mu(n/d)}
std::vector<std::int64_t> compute_cyclotomic(unsigned n) {
  std::vector<std::int64_t> poly{1};
  std::vector<unsigned> divide_by;
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d)
      continue;
    int mu = mobius(n / d);
    if (mu == 1) {
      std::vector<std::int64_t> next(poly.size() + d, 0);
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i + d] += poly[i];
        next[i] -= poly[i];
      }
      poly = std::move(next);
    } else if (mu == -1) {
      divide_by.push_back(d);
    }
  }
  for (unsigned d : divide_by) {
    // Exact division by x^d - 1: q_i = q_{i+d} + ... solved from the top.
    std::vector<std::int64_t> q(poly.size() - d, 0);
    std::vector<std::int64_t> r = poly;
    for (std::size_t i = r.size(); i-- > d;) {
      std::int64_t c = r[i];
      q[i - d] = c;
      r[i] -= c;
      r[i - d] += c;
    }
    for (std::size_t i = 0; i < d; ++i)
      if (r[i] != 0)
        throw InvariantError("cyclotomic polynomial division left a remainder");
    poly = std::move(q);
  }
  return poly;
}

} // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(unsigned n) {
  static std::mutex mu;
  static std::map<unsigned, std::vector<std::int64_t>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it == cache.end())
    it = cache.emplace(n, compute_cyclotomic(n)).first;
  return it->second;
}

std::vector<std::int64_t> reduce_mod_cyclotomic(std::vector<std::int64_t> poly, unsigned n) {
  const auto& phi = cyclotomic_polynomial(n);
  const std::size_t deg = phi.size() - 1;
  if (poly.size() < deg)
    poly.resize(deg, 0);
  for (std::size_t i = poly.size(); i-- > deg;) {
    std::int64_t c = poly[i];
    if (c == 0)
      continue;
    const std::size_t shift = i - deg;
    for (std::size_t j = 0; j <= deg; ++j)
      poly[shift + j] -= c * phi[j];
  }
  poly.resize(deg);
  return poly;
}

Cyc::Cyc(unsigned modulus) : coeffs_(modulus == 0 ? 1 : modulus, 0) {}

Cyc Cyc::integer(std::int64_t v, unsigned modulus) {
  Cyc c(modulus);
  c.coeffs_[0] = v;
  return c;
}

Cyc Cyc::root(unsigned modulus, unsigned k) {
  Cyc c(modulus);
  c.coeffs_[k % c.modulus()] = 1;
  return c;
}

Cyc Cyc::from_counts(std::vector<std::int64_t> counts) {
  Cyc c;
  if (counts.empty())
    counts.push_back(0);
  c.coeffs_ = std::move(counts);
  return c;
}

Cyc Cyc::with_modulus(unsigned e) const {
  const unsigned m = modulus();
  if (e == m)
    return *this;
  if (e % m != 0)
    throw PreconditionError("Cyc::with_modulus: target is not a multiple of the modulus");
  Cyc out(e);
  const unsigned step = e / m;
  for (unsigned j = 0; j < m; ++j)
    out.coeffs_[j * step] = coeffs_[j];
  return out;
}

Cyc Cyc::conj() const {
  const unsigned m = modulus();
  Cyc out(m);
  out.coeffs_[0] = coeffs_[0];
  for (unsigned j = 1; j < m; ++j)
    out.coeffs_[m - j] = coeffs_[j];
  return out;
}

Cyc& Cyc::operator+=(const Cyc& o) {
  const unsigned e = std::lcm(modulus(), o.modulus());
  if (e != modulus())
    *this = with_modulus(e);
  const unsigned step = e / o.modulus();
  for (unsigned j = 0; j < o.modulus(); ++j)
    coeffs_[j * step] += o.coeffs_[j];
  return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) {
  const unsigned e = std::lcm(modulus(), o.modulus());
  if (e != modulus())
    *this = with_modulus(e);
  const unsigned step = e / o.modulus();
  for (unsigned j = 0; j < o.modulus(); ++j)
    coeffs_[j * step] -= o.coeffs_[j];
  return *this;
}

Cyc& Cyc::operator*=(std::int64_t k) {
  for (auto& c : coeffs_)
    c *= k;
  return *this;
}

Cyc operator*(const Cyc& a, const Cyc& b) {
  const unsigned e = std::lcm(a.modulus(), b.modulus());
  const unsigned sa = e / a.modulus();
  const unsigned sb = e / b.modulus();
  Cyc out(e);
  for (unsigned i = 0; i < a.modulus(); ++i) {
    if (a.coeffs_[i] == 0)
      continue;
    for (unsigned j = 0; j < b.modulus(); ++j) {
      if (b.coeffs_[j] == 0)
        continue;
      out.coeffs_[(i * sa + j * sb) % e] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

bool Cyc::is_zero() const {
  for (auto c : reduce_mod_cyclotomic(coeffs_, modulus()))
    if (c != 0)
      return false;
  return true;
}

bool operator==(const Cyc& a, const Cyc& b) {
  if (a.modulus() == b.modulus() && a.coeffs_ == b.coeffs_)
    return true;
  return (a - b).is_zero();
}

std::optional<std::int64_t> Cyc::as_integer() const {
  auto r = reduce_mod_cyclotomic(coeffs_, modulus());
  for (std::size_t j = 1; j < r.size(); ++j)
    if (r[j] != 0)
      return std::nullopt;
  return r.empty() ? 0 : r[0];
}

bool Cyc::is_count_vector() const {
  for (auto c : coeffs_)
    if (c < 0)
      return false;
  return true;
}

std::int64_t Cyc::coefficient_sum() const { return std::accumulate(coeffs_.begin(), coeffs_.end(), std::int64_t(0)); }

std::string Cyc::to_string() const {
  if (auto v = as_integer())
    return std::to_string(*v);
  std::string out;
  for (unsigned j = 0; j < modulus(); ++j) {
    std::int64_t c = coeffs_[j];
    if (c == 0)
      continue;
    if (!out.empty() && c > 0)
      out += '+';
    if (j == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c == -1)
      out += '-';
    else if (c != 1)
      out += std::to_string(c) + "*";
    out += "z^" + std::to_string(j);
  }
  return out;
}

std::complex<double> Cyc::to_complex() const {
  std::complex<double> z = 0;
  const double m = modulus();
  for (unsigned j = 0; j < modulus(); ++j)
    if (coeffs_[j])
      z += double(coeffs_[j]) * std::polar(1.0, 2.0 * std::numbers::pi * j / m);
  return z;
}

void accumulate_product_conj(std::vector<std::int64_t>& acc, std::int64_t weight, const Cyc& a, const Cyc& b) {
  const unsigned e = static_cast<unsigned>(acc.size());
  const unsigned sa = e / a.modulus();
  const unsigned sb = e / b.modulus();
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  for (unsigned i = 0; i < a.modulus(); ++i) {
    if (ca[i] == 0)
      continue;
    const std::int64_t wa = weight * ca[i];
    const unsigned ia = i * sa;
    for (unsigned j = 0; j < b.modulus(); ++j) {
      if (cb[j] == 0)
        continue;
      // a_i zeta^i * conj(b_j zeta^j) = a_i b_j zeta^(i - j)
      acc[(ia + e - j * sb) % e] += wa * cb[j];
    }
  }
}

} // namespace charprod
