#include "verify.hpp"

#include <chrono>
#include <ctime>
#include <stdexcept>

#include "cli_util.hpp"
#include "fzeta/families.hpp"
#include "fzeta/fforacle.hpp"
#include "fzeta/qseries.hpp"

namespace fzeta::cli {

namespace {

using Clock = std::chrono::steady_clock;

struct Recorder {
  std::vector<CheckResult>& out;
  bool& pass;

  template <typename F>
  void run(const std::string& name, bool informational, F&& body) {
    CheckResult r;
    r.name = name;
    const auto t0 = Clock::now();
    bool ok = false;
    try {
      ok = body(r.details);
    } catch (const std::exception& e) {
      r.details["error"] = e.what();
      ok = false;
    }
    r.elapsed_ms =
        std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    r.status = informational ? "info" : (ok ? "pass" : "fail");
    if (informational) r.details["matches_expectation"] = ok;
    if (!informational && !ok) pass = false;
    out.push_back(std::move(r));
  }
};

json row_json(const SignTableRow& r) {
  json j;
  j["n"] = r.n;
  j["eval_point"] = r.eval_point;
  j["cutoff"] = r.cutoff;
  j["value"] = to_dec(r.value);
  j["sign"] = r.sign;
  j["claimed"] = r.claimed;
  j["match"] = r.match;
  if (!r.proof_claimed.empty()) {
    j["proof_claimed"] = r.proof_claimed;
    j["proof_match"] = r.proof_match;
  }
  return j;
}

void target_series_sigma(Recorder& rec, const VerifyOptions& opt) {
  rec.run("sigma-series-order8-display", false, [&](json& d) {
    const IntPoly expected = IntPoly::of({1, 1, -1, 2, -2, 1, 0, 1, -2});
    const IntPoly got = sigma_series_hypergeometric(8).to_poly();
    d["expected"] = format_poly(expected);
    d["computed"] = format_poly(got);
    return got == expected;
  });
  rec.run("sigma-series-route-agreement", false, [&](json& d) {
    const auto a = sigma_series_hypergeometric(opt.series_order);
    const auto b = sigma_series_product_form(opt.series_order);
    d["order"] = opt.series_order;
    if (a == b) return true;
    for (long k = 0; k <= opt.series_order; ++k)
      if (a.coeff(k) != b.coeff(k)) {
        d["first_mismatch_order"] = k;
        break;
      }
    return false;
  });
}

void target_series_sigma_star(Recorder& rec, const VerifyOptions& opt) {
  rec.run("sigma-star-series-order10-display", false, [&](json& d) {
    const IntPoly expected =
        IntPoly::of({0, -2, -2, -2, 0, 0, 0, 2, 2, 0, 2});
    const IntPoly got = sigma_star_series_hypergeometric(10).to_poly();
    d["expected"] = format_poly(expected);
    d["computed"] = format_poly(got);
    return got == expected;
  });
  rec.run("sigma-star-series-route-agreement", false, [&](json& d) {
    const auto a = sigma_star_series_hypergeometric(opt.series_order);
    const auto b = sigma_star_series_product_form(opt.series_order);
    d["order"] = opt.series_order;
    return a == b;
  });
}

void target_signs(Recorder& rec, Family f, const VerifyOptions& opt) {
  const std::string fname = family_name(f);
  const auto rows =
      sign_table(f, 1, opt.nmax, opt.convention, std::nullopt, opt.threads);
  rec.run(fname + "-statement-signs", false, [&](json& d) {
    json mism = json::array();
    long claimed_rows = 0;
    for (const auto& r : rows) {
      if (r.claimed.empty()) continue;
      ++claimed_rows;
      if (!r.match) mism.push_back(row_json(r));
    }
    d["rows"] = static_cast<long>(rows.size());
    d["claimed_rows"] = claimed_rows;
    d["mismatches"] = mism;
    return mism.empty();
  });
  rec.run(fname + "-proof-asides", true, [&](json& d) {
    json listed = json::array();
    bool all = true;
    for (const auto& r : rows) {
      if (r.proof_claimed.empty()) continue;
      listed.push_back(row_json(r));
      if (!r.proof_match) all = false;
    }
    d["rows"] = listed;
    return all;
  });
}

void target_prop77(Recorder& rec, const VerifyOptions& opt) {
  rec.run("kontsevich-pairing-identity", false, [&](json& d) {
    json bad = json::array();
    for (long k = 1; k <= opt.kmax; ++k) {
      const PairIdentity pi = kontsevich_pair_identity(k);
      if (!pi.equal) bad.push_back(k);
    }
    d["k_range"] = {1, opt.kmax};
    d["failures"] = bad;
    return bad.empty();
  });
  rec.run("kontsevich-single-pair-negativity", true, [&](json& d) {
    // The k=1 paired product alone has a negative torus coefficient, which is
    // why the grouping question arises at all.
    const auto report =
        check_constructible_f1({{kontsevich_pair_identity(1).rhs}});
    d["report"] = report.to_json();
    return report.verdict == Verdict::fails;
  });
  rec.run("kontsevich-aggregate-positivity", true, [&](json& d) {
    // The cited expectation is that grouping restores positivity for the
    // truncated sum; the exact torus expansion has T^1 = -1 for every cutoff,
    // so the computed verdict disagrees with that expectation. Reported
    // honestly, frozen by the unit tests.
    const auto report = check_constructible_f1(kontsevich_aggregate_group(4));
    d["report"] = report.to_json();
    d["documented_discrepancy"] =
        "aggregate torus expansion has coefficient -1 at T^1";
    return report.verdict == Verdict::holds;
  });
}

void target_lemma33(Recorder& rec, const VerifyOptions& opt) {
  rec.run("inverse-lefschetz-identity", false, [&](json& d) {
    json bad = json::array();
    for (long n = 1; n <= opt.level_max; ++n) {
      const HabiroElement inv = inverse_lefschetz(n);
      const HabiroElement q(n, IntPoly::monomial(1, Int(1)));
      const HabiroElement one(n, IntPoly(Int(1)));
      if (!(habiro_mul(q, inv) == one)) bad.push_back(n);
    }
    d["levels"] = {1, opt.level_max};
    d["failures"] = bad;
    return bad.empty();
  });
  rec.run("inverse-lefschetz-ev-compat", false, [&](json& d) {
    json bad = json::array();
    const HabiroElement inv = inverse_lefschetz(opt.level_max);
    for (long n = 1; n <= opt.level_max; ++n) {
      IntPoly e = ev_n(inv, n) * IntPoly::monomial(1, Int(1));
      IntPoly qn1 = IntPoly::monomial(n, Int(1)) + IntPoly(Int(-1));
      if (!(divrem_unit(e, qn1).rem == IntPoly(Int(1)))) bad.push_back(n);
    }
    d["failures"] = bad;
    return bad.empty();
  });
}

void target_lemma72(Recorder& rec, const VerifyOptions&) {
  rec.run("carlitz-product-class", false, [&](json& d) {
    json bad = json::array();
    for (long m = 1; m <= 6; ++m) {
      TorusDecomposition dec = torify_punctured_affine(2);
      for (long i = 2; i <= m; ++i)
        dec = product_decomposition(dec, torify_punctured_affine(2 * i));
      const GrothClass cls =
          GrothClass::lefschetz_power(m * m) * dec.reconstruct();
      if (!(cls.counting_poly() == family_term(Family::carlitz, m)))
        bad.push_back(m);
    }
    d["m_range"] = {1, 6};
    d["failures"] = bad;
    return bad.empty();
  });
  rec.run("carlitz-count-oracle", false, [&](json& d) {
    json rows = json::array();
    bool ok = true;
    for (long p : {2L, 3L, 5L}) {
      const std::uint64_t counted =
          count_matrix_equation(alternating_form(1), p);
      const Int expected = family_term(Family::carlitz, 1).eval(Int(p));
      rows.push_back({{"p", p},
                      {"counted", counted},
                      {"formula", to_dec(expected)}});
      if (Int(static_cast<long>(counted)) != expected) ok = false;
    }
    d["rows"] = rows;
    return ok;
  });
  rec.run("carlitz-form-dependence", true, [&](json& d) {
    // The count is specific to the alternating form: the identity form over
    // F_3 yields the orthogonal-group count 8, not E_2(3) = 24.
    const std::uint64_t sym = count_matrix_equation(identity_form(2), 3);
    d["symmetric_count_p3"] = sym;
    d["alternating_count_p3"] = count_matrix_equation(alternating_form(1), 3);
    return sym != 24;
  });
}

void target_lemma74(Recorder& rec, const VerifyOptions& opt) {
  rec.run("sigma-layer-torification", false, [&](json& d) {
    json bad = json::array();
    for (long j = 0; j <= 13; ++j) {
      const auto rep = check_motivic_f1(GrothClass(family_term(Family::sigma, j)));
      if (rep.verdict != Verdict::holds) bad.push_back(j);
    }
    d["layers"] = {0, 13};
    d["failures"] = bad;
    return bad.empty();
  });
  rec.run("sigma-series-identity", false, [&](json& d) {
    const long order = opt.series_order;
    d["order"] = order;
    return sigma_series_hypergeometric(order) ==
           sigma_series_product_form(order);
  });
}

void target_lemma76(Recorder& rec, const VerifyOptions& opt) {
  rec.run("sigma-star-pair-difference-identity", false, [&](json& d) {
    json bad = json::array();
    for (long l = 1; l <= opt.lmax; ++l) {
      IntPoly even_lo(Int(1));  // (q^2-1)...(q^(4l-2)-1)
      for (long i = 1; i <= 2 * l - 1; ++i)
        even_lo *= IntPoly::monomial(2 * i, Int(1)) + IntPoly(Int(-1));
      IntPoly even_hi =
          even_lo * (IntPoly::monomial(4 * l, Int(1)) + IntPoly(Int(-1)));
      const IntPoly lhs = IntPoly::monomial(2 * l + 1, Int(1)) * even_hi -
                          IntPoly::monomial(2 * l, Int(1)) * even_lo;
      IntPoly tail = IntPoly::monomial(4 * l + 1, Int(1));
      tail -= IntPoly::of({1, 1});
      const IntPoly rhs = IntPoly::monomial(2 * l, Int(1)) * even_lo * tail;
      if (!(lhs == rhs)) bad.push_back(l);
    }
    d["l_range"] = {1, opt.lmax};
    d["failures"] = bad;
    return bad.empty();
  });
  rec.run("sigma-star-pair-class-diff", true, [&](json& d) {
    // Exact torus expansion of L^(4l+1) - L - 1 against the published
    // display; the constant term differs by -1 for every l.
    json rows = json::array();
    bool expected_everywhere = true;
    for (long l = 1; l <= opt.lmax; ++l) {
      const PairClassDiff pc = sigma_star_pair_class(l);
      const bool expected =
          pc.diff.size() == 1 && pc.diff.count(0) == 1 && pc.diff.at(0) == -1;
      rows.push_back({{"l", l},
                      {"diff", coeff_map_json(pc.diff)},
                      {"is_documented_value", expected}});
      if (!expected) expected_everywhere = false;
    }
    d["rows"] = rows;
    d["documented_diff"] = {{"0", "-1"}};
    return expected_everywhere;
  });
}

void target_cond62(Recorder& rec, const VerifyOptions&) {
  rec.run("eval-point-dual-report", true, [&](json& d) {
    json rows = json::array();
    for (Family f : all_families()) {
      for (long n = 2; n <= 10; ++n) {
        const long cutoff = default_cutoff(f, n);
        const IntPoly s = family_partial_sum(f, cutoff);
        const Int at_1mn = s.eval(Int(1 - n));
        const Int at_mn = s.eval(Int(-n));
        rows.push_back(
            {{"family", family_name(f)},
             {"n", n},
             {"cutoff", cutoff},
             {"value_at_1_minus_n", to_dec(at_1mn)},
             {"sign_at_1_minus_n", at_1mn > 0 ? "+" : (at_1mn == 0 ? "0" : "-")},
             {"value_at_minus_n", to_dec(at_mn)},
             {"sign_at_minus_n", at_mn > 0 ? "+" : (at_mn == 0 ? "0" : "-")}});
      }
    }
    d["rows"] = rows;
    return true;
  });
}

void target_oracle_suite(Recorder& rec, const VerifyOptions&) {
  rec.run("gl-counts", false, [&](json& d) {
    json rows = json::array();
    bool ok = true;
    auto compare = [&](int m, long p) {
      const std::uint64_t counted = count_gl(m, p);
      const Int expected = gl_class(m).count(Int(p));
      rows.push_back({{"m", m}, {"p", p}, {"counted", counted},
                      {"formula", to_dec(expected)}});
      if (Int(static_cast<long>(counted)) != expected) ok = false;
    };
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) compare(1, p);
    for (long p : {2L, 3L, 5L, 7L}) compare(2, p);
    for (long p : {2L, 3L, 5L}) compare(3, p);
    d["rows"] = rows;
    return ok;
  });
  rec.run("matrix-equation-counts", false, [&](json& d) {
    json rows = json::array();
    bool ok = true;
    for (long p : {2L, 3L, 5L}) {
      const std::uint64_t counted =
          count_matrix_equation(alternating_form(1), p);
      const Int expected = family_term(Family::carlitz, 1).eval(Int(p));
      rows.push_back({{"p", p}, {"counted", counted},
                      {"formula", to_dec(expected)}});
      if (Int(static_cast<long>(counted)) != expected) ok = false;
    }
    d["rows"] = rows;
    return ok;
  });
  rec.run("projective-counts", false, [&](json& d) {
    bool ok = true;
    for (int n = 0; n <= 5; ++n)
      for (long p : {2L, 3L, 5L}) {
        const std::uint64_t counted = count_projective(n, p);
        if (Int(static_cast<long>(counted)) != q_int(n + 1).eval(Int(p)))
          ok = false;
      }
    d["range"] = "n <= 5, p in {2,3,5}";
    return ok;
  });
  rec.run("grassmannian-counts", false, [&](json& d) {
    json rows = json::array();
    bool ok = true;
    for (int n = 0; n <= 5; ++n)
      for (int j = 0; j <= n; ++j)
        for (long p : {2L, 3L}) {
          const std::uint64_t counted = count_grassmannian(n, j, p);
          const Int expected = q_binomial(n, j).eval(Int(p));
          if (Int(static_cast<long>(counted)) != expected) {
            ok = false;
            rows.push_back({{"n", n}, {"j", j}, {"p", p},
                            {"counted", counted},
                            {"formula", to_dec(expected)}});
          }
        }
    d["range"] = "n <= 5, all j, p in {2,3}";
    d["mismatches"] = rows;
    return ok;
  });
  rec.run("grassmannian-echelon-vs-sweep", false, [&](json& d) {
    bool ok = true;
    for (auto [n, j, p] : {std::tuple<int, int, long>{3, 1, 2},
                           {3, 2, 3},
                           {4, 2, 2},
                           {4, 2, 3}}) {
      if (count_grassmannian(n, j, p) != count_grassmannian_bruteforce(n, j, p))
        ok = false;
    }
    d["cases"] = "(3,1,2) (3,2,3) (4,2,2) (4,2,3)";
    return ok;
  });
}

std::string iso8601_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::tm tm_utc;
  gmtime_r(&t, &tm_utc);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

}  // namespace

nlohmann::json RunManifest::to_json() const {
  json checks_json = json::array();
  for (const auto& c : checks) {
    checks_json.push_back({{"name", c.name},
                           {"status", c.status},
                           {"elapsed_ms", c.elapsed_ms},
                           {"details", c.details}});
  }
  return {{"command", command},
          {"tool_version", tool_version},
          {"timestamp", timestamp},
          {"checks", checks_json},
          {"verdict", pass ? "pass" : "fail"}};
}

const std::vector<std::string>& verify_targets() {
  static const std::vector<std::string> t{
      "series-sigma", "series-sigma-star", "prop71", "prop73",
      "prop75",       "prop76",            "prop77", "lemma33",
      "lemma72",      "lemma74",           "lemma76", "cond62",
      "oracle-suite", "all"};
  return t;
}

RunManifest run_verify(const std::string& target, const VerifyOptions& opt) {
  RunManifest m;
  m.command = "verify " + target;
  m.tool_version = "0.1.0";
  m.timestamp = iso8601_now();
  Recorder rec{m.checks, m.pass};

  const bool all = (target == "all");
  bool known = all;
  auto want = [&](const std::string& t) {
    if (target == t) known = true;
    return all || target == t;
  };

  if (want("series-sigma")) target_series_sigma(rec, opt);
  if (want("series-sigma-star")) target_series_sigma_star(rec, opt);
  if (want("prop71")) target_signs(rec, Family::gl, opt);
  if (want("prop73")) target_signs(rec, Family::carlitz, opt);
  if (want("prop75")) target_signs(rec, Family::sigma, opt);
  if (want("prop76")) target_signs(rec, Family::sigma_star, opt);
  if (want("prop77")) target_prop77(rec, opt);
  if (want("lemma33")) target_lemma33(rec, opt);
  if (want("lemma72")) target_lemma72(rec, opt);
  if (want("lemma74")) target_lemma74(rec, opt);
  if (want("lemma76")) target_lemma76(rec, opt);
  if (want("cond62")) target_cond62(rec, opt);
  if (want("oracle-suite")) target_oracle_suite(rec, opt);

  if (!known)
    throw std::invalid_argument("unknown verify target '" + target + "'");
  return m;
}

}  // namespace fzeta::cli
