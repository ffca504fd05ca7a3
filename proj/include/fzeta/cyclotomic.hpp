#pragma once

#include <complex>

#include "fzeta/poly.hpp"

namespace fzeta {

/// Primitive root of unity zeta = exp(2*pi*i*numer/order), gcd(numer, order) = 1.
struct RootOfUnity {
  long order;
  long numer;

  RootOfUnity(long order_, long numer_);

  bool operator==(const RootOfUnity&) const = default;
};

/// The n-th cyclotomic polynomial Phi_n, computed by exact division
/// (q^n - 1) / prod_{d | n, d < n} Phi_d. Entries up to the cache bound are
/// memoized; the table is safe for concurrent use.
IntPoly cyclotomic(long n);

void set_cyclotomic_cache_bound(long bound);
long cyclotomic_cache_bound();

/// Element of Z[zeta_n] represented as a residue mod Phi_n
/// (degree < deg Phi_n = phi(n); for n = 1 the residue is a single integer).
class CyclotomicInt {
 public:
  CyclotomicInt(long order, const IntPoly& value);

  long order() const { return order_; }
  const IntPoly& residue() const { return residue_; }
  bool is_zero() const { return residue_.is_zero(); }
  /// For residues of degree <= 0 returns the integer value; throws
  /// std::domain_error if the residue is not rational.
  Int as_integer() const;

  bool operator==(const CyclotomicInt&) const = default;

  friend CyclotomicInt operator+(const CyclotomicInt& a, const CyclotomicInt& b);
  friend CyclotomicInt operator-(const CyclotomicInt& a, const CyclotomicInt& b);
  friend CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b);
  CyclotomicInt operator-() const;

  /// Numeric value with x mapped to exp(2*pi*i/order), for sanity checks only.
  std::complex<double> complex_value() const;

 private:
  long order_;
  IntPoly residue_;
};

/// Image of p under q -> zeta, i.e. p(x^numer) reduced mod Phi_order.
/// Exponents are reduced mod order first (x^order = 1 in Z[zeta]), so Laurent
/// input with negative exponents is fine.
CyclotomicInt eval_root(const IntPoly& p, const RootOfUnity& z);
CyclotomicInt eval_root(const LaurentPoly& p, const RootOfUnity& z);

}  // namespace fzeta
