#pragma once

#include <map>
#include <optional>

#include "fzeta/poly.hpp"
#include "fzeta/report.hpp"

namespace fzeta {

/// Class in the Grothendieck ring of varieties written as a Laurent
/// polynomial in the Lefschetz class L (localized at L). The counting
/// function of a genuine variety class is its value at q.
class GrothClass {
 public:
  GrothClass() = default;
  explicit GrothClass(LaurentPoly v) : v_(std::move(v)) {}
  explicit GrothClass(IntPoly p) : v_(LaurentPoly(std::move(p))) {}

  /// L^k (k may be negative).
  static GrothClass lefschetz_power(long k);
  static GrothClass constant(Int c);

  const LaurentPoly& value() const { return v_; }
  bool is_zero() const { return v_.is_zero(); }
  bool is_effective_polynomial() const { return v_.is_polynomial(); }
  /// Counting polynomial N(q); throws std::domain_error if the class has a
  /// pole at L = 0 (negative exponent).
  IntPoly counting_poly() const { return v_.as_polynomial(); }
  /// N(x) for integer x; same restriction as counting_poly().
  Int count(const Int& x) const { return counting_poly().eval(x); }

  bool operator==(const GrothClass&) const = default;
  friend GrothClass operator+(const GrothClass& a, const GrothClass& b) {
    return GrothClass(a.v_ + b.v_);
  }
  friend GrothClass operator-(const GrothClass& a, const GrothClass& b) {
    return GrothClass(a.v_ - b.v_);
  }
  friend GrothClass operator*(const GrothClass& a, const GrothClass& b) {
    return GrothClass(a.v_ * b.v_);
  }
  GrothClass operator-() const { return GrothClass(-v_); }

 private:
  LaurentPoly v_;
};

/// Certified torus decomposition: the class equals sum a_k T^k with every
/// a_k >= 0 (T = L - 1). Construction validates non-negativity.
struct TorusDecomposition {
  std::map<long, Int> counts;  // k -> a_k, entries nonzero

  explicit TorusDecomposition(std::map<long, Int> counts_);
  GrothClass reconstruct() const;
  /// sum a_k (x-1)^k, the point count implied by the decomposition.
  Int count(const Int& x) const;
};

/// Decomposition into affine cells: dim -> number of cells (all >= 0).
struct CellDecomposition {
  std::map<long, Int> cells;

  explicit CellDecomposition(std::map<long, Int> cells_);
  IntPoly counting_poly() const;
};

/// Signed expansion of a polynomial class in the torus basis: coefficients
/// b_k with class = sum b_k T^k. Throws std::domain_error on a class with
/// negative powers of L.
std::map<long, Int> to_torus_basis(const GrothClass& c);

/// sum b_k (L-1)^k (signed coefficients allowed).
GrothClass from_torus_basis(const std::map<long, Int>& coeffs);

/// Torus decomposition of the punctured affine space A^k minus 0:
/// L^k - 1 = sum_j C(k, j) T^j for j = 1..k.
TorusDecomposition torify_punctured_affine(long k);

/// Decomposition of a product from decompositions of the factors
/// (convolution of the coefficient maps).
TorusDecomposition product_decomposition(const TorusDecomposition& a,
                                         const TorusDecomposition& b);

/// Non-negativity of the torus-basis expansion; on success the certificate
/// carries the decomposition and the Euler-characteristic reading a_0.
ConditionReport check_motivic_f1(const GrothClass& c);

/// Support of the counting polynomial on exponents divisible by n with
/// positive coefficients.
ConditionReport check_eval_fzeta(const IntPoly& counting, long n);

/// Explicit split N = b(q) + (q^n - 1) P(q) with b supported on exponents
/// divisible by n and non-negative.
struct PartialEvalSplit {
  IntPoly b_part;
  IntPoly p_part;
};

/// Partial-evaluation structure at n. With an explicit split, verifies it
/// exactly. Without one, tries the canonical split (non-negative monomials
/// at n-divisible exponents into b, remainder must be divisible by q^n - 1);
/// the heuristic reports holds or undetermined, never fails.
ConditionReport check_partial_eval(const IntPoly& counting, long n,
                                   const std::optional<PartialEvalSplit>& split);

/// Non-negativity of the counting polynomial at every integer x >= 1, decided
/// either by torus-basis non-negativity or by exhaustive evaluation up to a
/// Cauchy-style dominance bound (recorded in the report). Also reports which
/// of the points {0, -1, -2, ...} down to the bound evaluate negative.
ConditionReport check_interp_positivity(const IntPoly& counting);

/// Dual torification: the torus expansion of c must be non-negative, and so
/// must that of the dual class c(-L). The dual is computed two provably equal
/// ways (direct substitution and sign-twisted torus reconstruction) and the
/// agreement is asserted internally.
ConditionReport check_dual_torification(const GrothClass& c);

}  // namespace fzeta
