#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "fzeta/int.hpp"

namespace fzeta {

/// Dense univariate polynomial over Z with arbitrary-precision coefficients.
/// Canonical form: the coefficient vector is empty (zero polynomial) or has a
/// nonzero last entry. All arithmetic is exact.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(Int constant);
  explicit IntPoly(std::vector<Int> coeffs);

  /// c * q^k, k >= 0.
  static IntPoly monomial(long k, Int c);
  /// Convenience: {c0, c1, ...} from machine integers.
  static IntPoly of(std::initializer_list<long> coeffs);

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  /// Coefficient of q^k (zero outside the stored range or for k < 0).
  const Int& coeff(long k) const;
  const std::vector<Int>& coeffs() const { return c_; }
  Int lead() const { return c_.empty() ? Int(0) : c_.back(); }

  bool operator==(const IntPoly&) const = default;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }
  IntPoly& operator*=(const Int& s);

  /// Exact evaluation at an integer point (Horner).
  Int eval(const Int& x) const;

  /// Multiplication by q^k, k >= 0.
  IntPoly shifted(long k) const;
  /// Substitution q -> q^n, n >= 1 (exponent scaling).
  IntPoly substitute_power(long n) const;
  /// p(q + c), exact Taylor shift.
  IntPoly taylor_shift(const Int& c) const;
  /// Largest absolute coefficient value (0 for the zero polynomial).
  Int max_abs_coeff() const;

 private:
  void trim();
  std::vector<Int> c_;
};

struct DivRem {
  IntPoly quot;
  IntPoly rem;
};

/// Long division a = quot * d + rem with deg(rem) < deg(d). Requires d nonzero
/// with leading coefficient +1 or -1 (so the division stays over Z); throws
/// std::invalid_argument otherwise.
DivRem divrem_unit(const IntPoly& a, const IntPoly& d);

/// Exact quotient; throws std::domain_error if d does not divide a.
IntPoly divide_exact(const IntPoly& a, const IntPoly& d);

/// Multiplication strategy knob for equivalence tests. `automatic` picks the
/// small-coefficient kernel path when the int64 overflow bound provably holds,
/// Karatsuba for large balanced bignum products, schoolbook otherwise.
enum class MulStrategy { automatic, bignum_schoolbook, bignum_karatsuba, smallint };

/// Multiplies with an explicit strategy. `smallint` throws std::domain_error
/// if the inputs do not satisfy the fast-path bound.
IntPoly mul_with(const IntPoly& a, const IntPoly& b, MulStrategy s);

/// Laurent polynomial q^offset * u(q). Canonical form: u has a nonzero
/// constant term, or the value is zero (offset 0, u = 0).
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(IntPoly u, long offset);
  explicit LaurentPoly(IntPoly u) : LaurentPoly(std::move(u), 0) {}

  static LaurentPoly monomial(long k, Int c);

  bool is_zero() const { return u_.is_zero(); }
  long offset() const { return off_; }
  const IntPoly& unit_part() const { return u_; }
  /// Smallest/largest exponent with nonzero coefficient; 0 for zero.
  long min_exp() const { return is_zero() ? 0 : off_; }
  long max_exp() const { return is_zero() ? 0 : off_ + u_.degree(); }
  Int coeff(long k) const;
  std::map<long, Int> terms() const;

  bool operator==(const LaurentPoly&) const = default;

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  bool is_polynomial() const { return is_zero() || off_ >= 0; }
  /// Throws std::domain_error if a negative exponent carries a nonzero
  /// coefficient.
  IntPoly as_polynomial() const;

 private:
  IntPoly u_;
  long off_ = 0;
};

/// Power series over Z truncated at a fixed order: coefficients of q^0..q^order.
class PowerSeriesTrunc {
 public:
  explicit PowerSeriesTrunc(long order);
  PowerSeriesTrunc(long order, const IntPoly& p);

  long order() const { return order_; }
  const Int& coeff(long k) const;
  void set_coeff(long k, Int v);
  const std::vector<Int>& coeffs() const { return c_; }
  /// The truncation as a polynomial of degree <= order.
  IntPoly to_poly() const;

  bool operator==(const PowerSeriesTrunc&) const = default;

  friend PowerSeriesTrunc operator+(const PowerSeriesTrunc& a,
                                    const PowerSeriesTrunc& b);
  friend PowerSeriesTrunc operator-(const PowerSeriesTrunc& a,
                                    const PowerSeriesTrunc& b);
  /// Truncated Cauchy product.
  friend PowerSeriesTrunc operator*(const PowerSeriesTrunc& a,
                                    const PowerSeriesTrunc& b);

 private:
  long order_;
  std::vector<Int> c_;  // size order_ + 1
};

/// Multiplicative inverse mod q^(order+1). Requires constant term +1 or -1;
/// throws std::invalid_argument otherwise.
PowerSeriesTrunc series_inverse(const PowerSeriesTrunc& a);

}  // namespace fzeta
