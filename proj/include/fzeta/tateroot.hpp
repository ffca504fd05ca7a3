#pragma once

#include <optional>

#include "fzeta/grothendieck.hpp"
#include "fzeta/poly.hpp"

namespace fzeta {

/// Raised when a class with a negative Lefschetz-basis coefficient is offered
/// to the root-adjunction functor (no F1-structure to transport).
struct NoF1StructureError : std::domain_error {
  long exponent;
  Int coefficient;
  NoF1StructureError(long exp, Int coeff);
};

/// Class in Z[L^(1/n), L^(-1/n)]: value is a Laurent polynomial in t with
/// t^root_order = L, so the t-exponent k stands for L^(k/root_order).
/// Representations are normalized: gcd of the root order and all exponents
/// is divided out (so L itself is always (order 1, t^1)).
class TateRootClass {
 public:
  TateRootClass(long root_order, LaurentPoly value);

  long root_order() const { return order_; }
  const LaurentPoly& value() const { return value_; }
  bool operator==(const TateRootClass&) const = default;

  friend TateRootClass operator+(const TateRootClass& a, const TateRootClass& b);
  friend TateRootClass operator*(const TateRootClass& a, const TateRootClass& b);

 private:
  long order_;
  LaurentPoly value_;
};

/// Canonical root structure on an effective class: the coefficient of L^k
/// moves to t^k, i.e. to L^(k/n). The result is integral iff n divides every
/// exponent in the support. Throws NoF1StructureError if any Lefschetz
/// coefficient is negative.
TateRootClass tate_root(const GrothClass& c, long n);

/// True iff every exponent is divisible by the root order (the class already
/// lives in Z[L, L^(-1)]); otherwise reports the first fractional exponent
/// as (numerator, root_order).
struct IntegralityResult {
  bool integral;
  std::optional<long> fractional_exponent;  // t-exponent witnessing failure
};
IntegralityResult is_integral(const TateRootClass& c);

/// If integral, the class transported back to the Lefschetz basis.
GrothClass to_groth(const TateRootClass& c);

/// Z[t] / (t^modulus - 1): the orbit-level shadow of the Grothendieck class
/// under tensoring by a periodic Tate object.
class OrbitClass {
 public:
  OrbitClass(long modulus, const IntPoly& value);

  long modulus() const { return modulus_; }
  const IntPoly& value() const { return value_; }

  bool operator==(const OrbitClass&) const = default;
  friend OrbitClass operator+(const OrbitClass& a, const OrbitClass& b);
  friend OrbitClass operator*(const OrbitClass& a, const OrbitClass& b);

 private:
  long modulus_;
  IntPoly value_;  // degree < modulus
};

/// Reduces a Lefschetz-basis class mod L^period = 1 (Laurent exponents are
/// folded via L^(-1) = L^(period-1)).
OrbitClass orbit_reduce(const GrothClass& c, long period);

/// Product of root classes with different root orders, computed in the
/// common refinement (lcm of the orders).
TateRootClass rational_power_mul(const TateRootClass& a, const TateRootClass& b);

/// Substitution L -> L^(num/den) (rational rescaling of the grading).
TateRootClass rescale(const TateRootClass& a, long num, long den);

}  // namespace fzeta
