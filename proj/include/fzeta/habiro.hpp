#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fzeta/cyclotomic.hpp"
#include "fzeta/grothendieck.hpp"
#include "fzeta/poly.hpp"
#include "fzeta/report.hpp"

namespace fzeta {

/// Modulus of the level-N truncation: (q)_N = (q-1)(q^2-1)...(q^N-1),
/// degree N(N+1)/2, leading coefficient 1. Cached per level.
IntPoly habiro_modulus(long level);

/// Element of Z[q] / ((q)_N): canonical representative of degree
/// < N(N+1)/2. Arithmetic requires equal levels (no implicit projection).
class HabiroElement {
 public:
  HabiroElement(long level, const IntPoly& value);

  long level() const { return level_; }
  const IntPoly& rep() const { return rep_; }

  bool operator==(const HabiroElement&) const = default;

 private:
  long level_;
  IntPoly rep_;
};

/// Projection to a lower (or equal) level; throws std::invalid_argument if
/// target > source level.
HabiroElement habiro_project(const HabiroElement& a, long level);

HabiroElement habiro_add(const HabiroElement& a, const HabiroElement& b);
HabiroElement habiro_sub(const HabiroElement& a, const HabiroElement& b);
HabiroElement habiro_mul(const HabiroElement& a, const HabiroElement& b);

/// Unique expansion rep = sum_m parts[m](q) * (q)_m with deg parts[m] <= m,
/// m = 0..level-1 (the blocks q^j (q)_m, 0 <= j <= m, tile the degrees below
/// N(N+1)/2 exactly once).
struct HabiroNormalForm {
  long level;
  std::vector<IntPoly> parts;
};

HabiroNormalForm normal_form(const HabiroElement& a);
HabiroElement from_normal_form(const HabiroNormalForm& nf);

/// Residue of the representative mod q^n - 1 ("evaluation over F_(1^(n-1))").
/// Requires n <= level; throws std::invalid_argument with an "insufficient
/// truncation level" message otherwise.
IntPoly ev_n(const HabiroElement& a, long n);

/// Value at a root of unity of order <= level.
CyclotomicInt ev_zeta(const HabiroElement& a, const RootOfUnity& z);

/// First `count` Taylor coefficients at the root z: g_j = p^(j)(zeta)/j! in
/// Z[zeta], well defined for count <= floor(level / z.order).
std::vector<CyclotomicInt> taylor_zeta(const HabiroElement& a,
                                       const RootOfUnity& z, long count);

/// Frobenius lift q -> q^n (well defined because (q)_N divides (q)_N(q^n)).
HabiroElement frobenius(const HabiroElement& a, long n);

/// The element sum_{m=0}^{N-1} q^m (1-q)(1-q^2)...(1-q^m), a multiplicative
/// inverse of q at level N: q * inverse_lefschetz(N) = 1 mod (q)_N.
HabiroElement inverse_lefschetz(long level);

/// Ind-variety presented by layer classes: the n-th truncation has counting
/// polynomial sum_{m < n} alpha_m(q) * (q)_m.
struct IndFamilySpec {
  std::string name;
  std::function<IntPoly(long)> alpha;  // alpha_m for m >= 0
};

/// F1-structure of the truncations: every alpha_m, m < n, must have a
/// non-negative torus-basis expansion.
ConditionReport check_ind_f1(const IndFamilySpec& spec, long n);

enum class EvalConvention { one_minus_n, minus_n };

inline long eval_point(EvalConvention c, long n) {
  return c == EvalConvention::one_minus_n ? 1 - n : -n;
}

/// Sign of the n-th truncation's counting polynomial at the convention's
/// evaluation point; holds iff the value is >= 0.
ConditionReport check_ind_fzeta(const IndFamilySpec& spec, long n,
                                EvalConvention conv = EvalConvention::one_minus_n);

/// Constructible (aggregate) F1-structure: each prescribed group of summands
/// must have a non-negative torus expansion in aggregate, even if individual
/// summands do not. Reports per-group expansions.
ConditionReport check_constructible_f1(const std::vector<std::vector<IntPoly>>& groups);

}  // namespace fzeta
