#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace charprod {

/// Coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<std::int64_t>& cyclotomic_polynomial(unsigned n);

/// Reduces a polynomial (constant term first) modulo the n-th cyclotomic
/// polynomial; the result has exactly phi(n) coefficients.
std::vector<std::int64_t> reduce_mod_cyclotomic(std::vector<std::int64_t> poly, unsigned n);

/// An element of Z[zeta_e], zeta_e = exp(2 pi i / e), stored as the
/// coefficient vector of sum_j c_j zeta^j for j = 0..e-1.
///
/// The representation is not canonical: arithmetic happens modulo x^e - 1
/// and equality is decided by reducing the difference modulo the e-th
/// cyclotomic polynomial. Character values produced by the table builder
/// are eigenvalue multiplicity vectors (all c_j >= 0, summing to the
/// degree), which *are* canonical among such vectors.
///
/// Binary operations between values of different moduli work in the lcm.
class Cyc {
public:
  Cyc() : coeffs_{0} {}
  explicit Cyc(unsigned modulus);

  static Cyc integer(std::int64_t v, unsigned modulus = 1);
  /// zeta_modulus^k
  static Cyc root(unsigned modulus, unsigned k);
  static Cyc from_counts(std::vector<std::int64_t> counts);

  unsigned modulus() const { return static_cast<unsigned>(coeffs_.size()); }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  std::int64_t operator[](std::size_t j) const { return coeffs_[j]; }

  /// Same value written over the e-th roots of unity; `e` must be a
  /// multiple of modulus().
  Cyc with_modulus(unsigned e) const;

  /// Complex conjugate: j -> -j mod e.
  Cyc conj() const;

  Cyc& operator+=(const Cyc& o);
  Cyc& operator-=(const Cyc& o);
  Cyc& operator*=(std::int64_t k);
  friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
  friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
  friend Cyc operator*(Cyc a, std::int64_t k) { return a *= k; }
  friend Cyc operator*(const Cyc& a, const Cyc& b);

  /// Exact equality in the cyclotomic field.
  friend bool operator==(const Cyc& a, const Cyc& b);
  bool is_zero() const;

  /// Value as a rational integer, if it is one.
  std::optional<std::int64_t> as_integer() const;

  /// Plain coefficient-vector equality (no reduction).
  bool same_coeffs(const Cyc& o) const { return coeffs_ == o.coeffs_; }

  /// Non-negative coefficients, i.e. an eigenvalue multiset.
  bool is_count_vector() const;
  std::int64_t coefficient_sum() const;

  /// Canonical text: the integer when rational, otherwise the count
  /// expansion such as "z^1+2*z^4" (z = zeta_e).
  std::string to_string() const;

  std::complex<double> to_complex() const;

private:
  std::vector<std::int64_t> coeffs_;
};

/// Accumulates sum_k w_k * a_k * conj(b_k) in the dense x^e - 1 ring.
/// Used by inner products; only nonzero coefficients are visited.
void accumulate_product_conj(std::vector<std::int64_t>& acc, std::int64_t weight, const Cyc& a, const Cyc& b);

} // namespace charprod
