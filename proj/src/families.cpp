#include "fzeta/families.hpp"

#include <stdexcept>
#include <thread>

#include "fzeta/qseries.hpp"

namespace fzeta {

Family family_from_name(const std::string& name) {
  if (name == "gl") return Family::gl;
  if (name == "carlitz") return Family::carlitz;
  if (name == "sigma") return Family::sigma;
  if (name == "sigma-star") return Family::sigma_star;
  if (name == "kontsevich") return Family::kontsevich;
  throw std::invalid_argument("unknown family '" + name + "'");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::gl: return "gl";
    case Family::carlitz: return "carlitz";
    case Family::sigma: return "sigma";
    case Family::sigma_star: return "sigma-star";
    case Family::kontsevich: return "kontsevich";
  }
  return "?";
}

const std::vector<Family>& all_families() {
  static const std::vector<Family> v{Family::gl, Family::carlitz, Family::sigma,
                                     Family::sigma_star, Family::kontsevich};
  return v;
}

namespace {

// (q^2 - 1)(q^4 - 1)...(q^(2m) - 1)
IntPoly pochhammer_even(long m) {
  IntPoly acc(Int(1));
  for (long i = 1; i <= m; ++i) {
    IntPoly f = IntPoly::monomial(2 * i, Int(1)) + IntPoly(Int(-1));
    acc *= f;
  }
  return acc;
}

}  // namespace

GrothClass gl_class(long m) {
  if (m < 0) throw std::invalid_argument("gl index must be >= 0");
  return GrothClass(family_term(Family::gl, m));
}

GrothClass carlitz_class(long m) {
  if (m < 0) throw std::invalid_argument("carlitz index must be >= 0");
  return GrothClass(family_term(Family::carlitz, m));
}

IntPoly family_term(Family f, long j) {
  if (j < 0) throw std::invalid_argument("term index must be >= 0");
  switch (f) {
    case Family::gl:
      return IntPoly::monomial(j * (j - 1) / 2, Int(1)) * pochhammer_qminus(j);
    case Family::carlitz:
      return IntPoly::monomial(j * j, Int(1)) * pochhammer_even(j);
    case Family::sigma:
      if (j == 0) return IntPoly(Int(1));
      return IntPoly::monomial(j, Int(1)) * pochhammer_qminus(j - 1);
    case Family::sigma_star:
      return IntPoly::monomial(j + 1, Int(j % 2 == 0 ? -2 : 2)) *
             pochhammer_even(j);
    case Family::kontsevich:
      return pochhammer_oneminus(j);
  }
  throw std::logic_error("unreachable");
}

IntPoly family_partial_sum(Family f, long cutoff) {
  if (cutoff < 0) throw std::invalid_argument("cutoff must be >= 0");
  IntPoly acc;
  for (long j = 0; j <= cutoff; ++j) acc += family_term(f, j);
  return acc;
}

long default_cutoff(Family f, long n) {
  if (n < 1) throw std::invalid_argument("order must be >= 1");
  switch (f) {
    case Family::gl:
      return n - 1;
    case Family::carlitz:
    case Family::sigma_star:
      return (n % 2 == 1) ? n - 1 : n / 2 - 1;
    case Family::sigma:
    case Family::kontsevich:
      return n;
  }
  throw std::logic_error("unreachable");
}

std::string statement_claim(Family f, long n) {
  switch (f) {
    case Family::gl:
      return n % 2 == 1 ? ">=0" : "";
    case Family::carlitz:
      return (n % 2 == 1 || n % 4 == 2) ? ">=0" : "";
    case Family::sigma:
      return (n == 1 || n % 4 == 3 || n % 4 == 0) ? ">=0" : "";
    case Family::sigma_star:
      return n % 4 == 0 ? ">=0" : "";
    case Family::kontsevich:
      return "";
  }
  return "";
}

std::string proof_claim(Family f, long n) {
  switch (f) {
    case Family::gl:
      return n % 2 == 0 ? "<0" : "";
    case Family::carlitz:
      return n % 4 == 0 ? "<0" : "";
    case Family::sigma:
      if (n == 1) return ">0";
      return (n % 4 == 2 || (n > 1 && n % 4 == 1)) ? "<0" : "";
    case Family::sigma_star:
      if (n == 1) return "=0";
      return (n % 4 == 2 || (n > 2 && n % 2 == 1)) ? "<0" : "";
    case Family::kontsevich:
      return "";
  }
  return "";
}

namespace {

bool claim_matches(const std::string& claim, const std::string& sign) {
  if (claim.empty()) return true;
  if (claim == ">=0") return sign == "+" || sign == "0";
  if (claim == ">0") return sign == "+";
  if (claim == "=0") return sign == "0";
  if (claim == "<0") return sign == "-";
  throw std::logic_error("unknown claim encoding '" + claim + "'");
}

}  // namespace

std::vector<SignTableRow> sign_table(Family f, long n_lo, long n_hi,
                                     EvalConvention conv,
                                     std::optional<long> cutoff_override,
                                     int threads) {
  if (n_lo < 1 || n_hi < n_lo)
    throw std::invalid_argument("need 1 <= n_lo <= n_hi");
  const std::size_t count = static_cast<std::size_t>(n_hi - n_lo + 1);
  std::vector<SignTableRow> rows(count);
  const bool claims_apply = (conv == EvalConvention::one_minus_n);

  auto compute_row = [&](std::size_t i) {
    const long n = n_lo + static_cast<long>(i);
    SignTableRow& row = rows[i];
    row.n = n;
    row.eval_point = eval_point(conv, n);
    row.cutoff = cutoff_override.value_or(default_cutoff(f, n));
    row.value = family_partial_sum(f, row.cutoff).eval(Int(row.eval_point));
    row.sign = row.value > 0 ? "+" : (row.value == 0 ? "0" : "-");
    row.claimed = claims_apply ? statement_claim(f, n) : "";
    row.match = claim_matches(row.claimed, row.sign);
    row.proof_claimed = claims_apply ? proof_claim(f, n) : "";
    row.proof_match = claim_matches(row.proof_claimed, row.sign);
  };

  const int nthreads = std::max(1, threads);
  if (nthreads == 1) {
    for (std::size_t i = 0; i < count; ++i) compute_row(i);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(nthreads));
    for (int t = 0; t < nthreads; ++t) {
      pool.emplace_back([&, t]() {
        for (std::size_t i = static_cast<std::size_t>(t); i < count;
             i += static_cast<std::size_t>(nthreads))
          compute_row(i);
      });
    }
    for (auto& th : pool) th.join();
  }
  return rows;
}

std::string sign_table_csv(const std::vector<SignTableRow>& rows) {
  std::string out = "n,eval_point,value,sign,claimed,match\n";
  for (const auto& r : rows) {
    out += std::to_string(r.n) + ',' + std::to_string(r.eval_point) + ',' +
           to_dec(r.value) + ',' + r.sign + ',' + r.claimed + ',' +
           (r.match ? "true" : "false") + '\n';
  }
  return out;
}

IndFamilySpec ind_spec(Family f) {
  switch (f) {
    case Family::gl:
      return {"gl", [](long m) {
                return IntPoly::monomial(m * (m - 1) / 2, Int(1));
              }};
    case Family::sigma:
      return {"sigma", [](long m) {
                if (m == 0) return IntPoly::of({1, 1});
                return IntPoly::monomial(m + 1, Int(1));
              }};
    default:
      throw std::invalid_argument(
          "no ind-family layer presentation for family '" + family_name(f) +
          "'");
  }
}

PairIdentity kontsevich_pair_identity(long k) {
  if (k < 1) throw std::invalid_argument("pair index must be >= 1");
  PairIdentity pi;
  pi.lhs = pochhammer_oneminus(2 * k - 1) + pochhammer_oneminus(2 * k);
  pi.rhs = (IntPoly::monomial(2 * k, Int(1)) + IntPoly(Int(-2))) *
           pochhammer_qminus(2 * k - 1);
  pi.equal = (pi.lhs == pi.rhs);
  return pi;
}

std::vector<std::vector<IntPoly>> kontsevich_aggregate_group(long N) {
  if (N < 0) throw std::invalid_argument("cutoff must be >= 0");
  std::vector<IntPoly> group;
  for (long j = 0; j <= N; ++j) group.push_back(family_term(Family::kontsevich, j));
  return {group};
}

PairClassDiff sigma_star_pair_class(long l) {
  if (l < 1) throw std::invalid_argument("pair index must be >= 1");
  PairClassDiff d;
  const long e = 4 * l + 1;
  IntPoly p = IntPoly::monomial(e, Int(1));
  p -= IntPoly::of({1, 1});  // L^(4l+1) - L - 1
  d.computed = to_torus_basis(GrothClass(p));
  d.display[1] = Int(4 * l);
  Int binom;
  for (long k = 2; k <= e; ++k) {
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(e),
                 static_cast<unsigned long>(k));
    d.display[k] = binom;
  }
  std::map<long, Int> diff;
  for (const auto& [k, v] : d.computed) diff[k] += v;
  for (const auto& [k, v] : d.display) diff[k] -= v;
  for (auto it = diff.begin(); it != diff.end();)
    it = (it->second == 0) ? diff.erase(it) : std::next(it);
  d.diff = std::move(diff);
  return d;
}

PowerSeriesTrunc sigma_series_hypergeometric(long order) {
  PowerSeriesTrunc acc(order);
  IntPoly denom(Int(1));
  for (long n = 0; n * (n + 1) / 2 <= order; ++n) {
    if (n > 0) denom *= IntPoly::monomial(n, Int(1)) + IntPoly(Int(1));  // 1 + q^n
    PowerSeriesTrunc term =
        PowerSeriesTrunc(order, IntPoly::monomial(n * (n + 1) / 2, Int(1))) *
        series_inverse(PowerSeriesTrunc(order, denom));
    acc = acc + term;
  }
  return acc;
}

PowerSeriesTrunc sigma_series_product_form(long order) {
  IntPoly acc(Int(1));
  for (long m = 0; m + 1 <= order; ++m)
    acc += IntPoly::monomial(m + 1, Int(1)) * pochhammer_qminus(m);
  return PowerSeriesTrunc(order, acc);
}

PowerSeriesTrunc sigma_star_series_hypergeometric(long order) {
  PowerSeriesTrunc acc(order);
  IntPoly denom(Int(1));
  for (long n = 1; n * n <= order; ++n) {
    denom *= IntPoly(Int(1)) - IntPoly::monomial(2 * n - 1, Int(1));  // 1 - q^(2n-1)
    PowerSeriesTrunc term =
        PowerSeriesTrunc(order,
                         IntPoly::monomial(n * n, Int(n % 2 == 0 ? 2 : -2))) *
        series_inverse(PowerSeriesTrunc(order, denom));
    acc = acc + term;
  }
  return acc;
}

PowerSeriesTrunc sigma_star_series_product_form(long order) {
  IntPoly acc;
  for (long k = 0; k + 1 <= order; ++k) acc += family_term(Family::sigma_star, k);
  return PowerSeriesTrunc(order, acc);
}

}  // namespace fzeta
