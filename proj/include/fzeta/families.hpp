#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fzeta/grothendieck.hpp"
#include "fzeta/habiro.hpp"
#include "fzeta/poly.hpp"

namespace fzeta {

/// The worked example families: general linear groups, Carlitz spheres, the
/// two Ramanujan q-hypergeometric series, and the Kontsevich series.
enum class Family { gl, carlitz, sigma, sigma_star, kontsevich };

Family family_from_name(const std::string& name);  // throws on unknown name
std::string family_name(Family f);
const std::vector<Family>& all_families();

/// [GL_m] = q^(m(m-1)/2) (q-1)(q^2-1)...(q^m-1).
GrothClass gl_class(long m);

/// Carlitz layer X_m with class q^(m^2) (q^2-1)(q^4-1)...(q^(2m)-1).
GrothClass carlitz_class(long m);

/// j-th summand of the family's counting series, as a polynomial in q:
///   gl         j = 0: 1;  j >= 1: q^(j(j-1)/2) (q)_j
///   carlitz    q^(j^2) (q^2-1)...(q^(2j)-1)
///   sigma      j = 0: 1;  j >= 1: q^j (q)_(j-1)
///   sigma_star 2 (-1)^(j+1) q^(j+1) (q^2-1)(q^4-1)...(q^(2j)-1)
///   kontsevich (1-q)(1-q^2)...(1-q^j)
IntPoly family_term(Family f, long j);

/// sum_{j=0}^{cutoff} family_term(f, j).
IntPoly family_partial_sum(Family f, long cutoff);

/// Truncation index used by the sign claims at evaluation order n, following
/// the pairing arguments that prove them:
///   gl, sigma_star (odd n), carlitz (odd n): n - 1
///   carlitz, sigma_star (even n): n/2 - 1
///   sigma: n (the leading 1 plus terms m = 0..n-1)
///   kontsevich: n (no sign claims attached)
long default_cutoff(Family f, long n);

/// Sign claim encoding: ">=0", "<0", "=0", or "" (no claim).
struct SignTableRow {
  long n = 0;
  long eval_point = 0;
  long cutoff = 0;
  Int value;
  std::string sign;           // "+", "0", "-"
  std::string claimed;        // statement-level claim
  bool match = true;          // vacuously true when unclaimed
  std::string proof_claimed;  // proof-level numeric asides
  bool proof_match = true;
};

/// Statement-level sign claim at order n (the published inequality).
std::string statement_claim(Family f, long n);
/// Proof-level aside (secondary; mismatches are reported, not fatal).
std::string proof_claim(Family f, long n);

/// Evaluates the family's truncated counting polynomial at the convention's
/// point for n = n_lo..n_hi and compares against the claims. The cutoff
/// override replaces default_cutoff for every row. Claims are attached only
/// under the 1-n convention.
std::vector<SignTableRow> sign_table(Family f, long n_lo, long n_hi,
                                     EvalConvention conv = EvalConvention::one_minus_n,
                                     std::optional<long> cutoff_override = std::nullopt,
                                     int threads = 1);

std::string sign_table_csv(const std::vector<SignTableRow>& rows);

/// Ind-family layer presentation (counting polynomial of the n-th truncation
/// is sum_{m<n} alpha_m (q)_m): available for gl and sigma.
IndFamilySpec ind_spec(Family f);

/// The pairing identity behind the Kontsevich positivity grouping:
/// (1-q)...(1-q^(2k-1)) + (1-q)...(1-q^(2k)) = (q^(2k) - 2) (q)_(2k-1).
struct PairIdentity {
  IntPoly lhs;
  IntPoly rhs;
  bool equal;
};
PairIdentity kontsevich_pair_identity(long k);

/// Torus-basis groups for the constructible check on the Kontsevich partial
/// sum to cutoff N: the whole truncation as one aggregate group.
std::vector<std::vector<IntPoly>> kontsevich_aggregate_group(long N);

/// Exact torus expansion of L^(4l+1) - L - 1 diffed against the published
/// display 4l T + sum_{k=2}^{4l+1} C(4l+1, k) T^k.
struct PairClassDiff {
  std::map<long, Int> computed;
  std::map<long, Int> display;
  std::map<long, Int> diff;  // computed - display
};
PairClassDiff sigma_star_pair_class(long l);

/// Series expansion routes. `hypergeometric` builds the defining q-series
/// (with denominator inversion); `product_form` builds the rewritten sum of
/// finite products. Both truncated to the given order.
PowerSeriesTrunc sigma_series_hypergeometric(long order);
PowerSeriesTrunc sigma_series_product_form(long order);
PowerSeriesTrunc sigma_star_series_hypergeometric(long order);
PowerSeriesTrunc sigma_star_series_product_form(long order);

}  // namespace fzeta
