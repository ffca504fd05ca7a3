#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "fzeta/grothendieck.hpp"
#include "fzeta/polyio.hpp"
#include "fzeta/qseries.hpp"

using namespace fzeta;

namespace {

std::mt19937_64 rng(0xf1f1);

IntPoly random_poly(long max_deg, long coeff_bound, bool nonneg = false) {
  std::uniform_int_distribution<long> deg(0, max_deg);
  std::uniform_int_distribution<long> c(nonneg ? 0 : -coeff_bound, coeff_bound);
  const long d = deg(rng);
  std::vector<Int> v;
  for (long i = 0; i <= d; ++i) v.emplace_back(c(rng));
  return IntPoly(std::move(v));
}

std::map<long, Int> json_coeff_map(const nlohmann::json& j) {
  std::map<long, Int> m;
  for (const auto& [k, v] : j.items())
    m[std::stol(k)] = parse_int(v.get<std::string>());
  return m;
}

}  // namespace

TEST_CASE("basis conversion roundtrips on 500 random classes of degree <= 40") {
  for (int iter = 0; iter < 500; ++iter) {
    const GrothClass c(random_poly(40, 1000));
    CHECK(from_torus_basis(to_torus_basis(c)) == c);
  }
  // and the reverse direction from random signed torus coefficients
  for (int iter = 0; iter < 200; ++iter) {
    std::map<long, Int> coeffs;
    std::uniform_int_distribution<long> k(0, 30), v(-50, 50);
    for (int t = 0; t < 8; ++t) coeffs[k(rng)] = Int(v(rng));
    const GrothClass c = from_torus_basis(coeffs);
    std::map<long, Int> trimmed;
    for (const auto& [e, b] : coeffs)
      if (b != 0) trimmed[e] = b;
    CHECK(to_torus_basis(c) == trimmed);
  }
}

TEST_CASE("to_torus_basis rejects classes with a pole at L = 0") {
  const GrothClass c(LaurentPoly(IntPoly::of({1, 1}), -2));
  CHECK_THROWS_AS(to_torus_basis(c), std::domain_error);
}

TEST_CASE("motivic-f1: projective plane and frozen failure") {
  const auto ok = check_motivic_f1(GrothClass(IntPoly::of({1, 1, 1})));
  CHECK(ok.verdict == Verdict::holds);
  CHECK(ok.certificate["counts"] ==
        nlohmann::json({{"0", "3"}, {"1", "3"}, {"2", "1"}}));
  CHECK(ok.extra["euler_characteristic"] == "3");

  CHECK(check_motivic_f1(GrothClass(IntPoly(Int(1)))).verdict == Verdict::holds);

  // L^2 - 2 = T^2 + 2T - 1
  const auto bad = check_motivic_f1(GrothClass(IntPoly::of({-2, 0, 1})));
  CHECK(bad.verdict == Verdict::fails);
  CHECK(bad.witness["t_exponent"] == 0);
  CHECK(bad.witness["coefficient"] == "-1");
}

TEST_CASE("torus certificates count points correctly") {
  std::uniform_int_distribution<long> pt(-6, 6);
  for (int iter = 0; iter < 200; ++iter) {
    const IntPoly p = random_poly(15, 40, true);
    const GrothClass c(p);
    const auto rep = check_motivic_f1(c);
    if (rep.verdict != Verdict::holds) continue;
    const TorusDecomposition dec{json_coeff_map(rep.certificate["counts"])};
    for (int k = 0; k < 5; ++k) {
      const Int x(pt(rng));
      CHECK(dec.count(x) == c.count(x));
    }
    CHECK(dec.reconstruct() == c);
  }
}

TEST_CASE("eval-fzeta: frozen examples") {
  CHECK(check_eval_fzeta(IntPoly::of({1, 0, 0, 1, 0, 0, 2}), 3).verdict ==
        Verdict::holds);
  const auto bad = check_eval_fzeta(IntPoly::of({1, 1, 1}), 3);
  CHECK(bad.verdict == Verdict::fails);
  CHECK(bad.witness["exponent"] == 1);
  const auto neg = check_eval_fzeta(IntPoly::of({1, 0, -1, 1}), 1);
  CHECK(neg.verdict == Verdict::fails);
  CHECK(neg.witness["reason"] == "negative coefficient");
  // n = 1 is exactly coefficient non-negativity
  for (int iter = 0; iter < 100; ++iter) {
    const IntPoly p = random_poly(12, 20);
    bool nonneg = true;
    for (long k = 0; k <= p.degree(); ++k)
      if (p.coeff(k) < 0) nonneg = false;
    CHECK((check_eval_fzeta(p, 1).verdict == Verdict::holds) == nonneg);
  }
}

TEST_CASE("eval-fzeta implies motivic-f1 (implication chain)") {
  std::uniform_int_distribution<long> nd(1, 6), slots(1, 6), coef(0, 30),
      kd(0, 6);
  for (int iter = 0; iter < 300; ++iter) {
    const long n = nd(rng);
    IntPoly p;
    for (long s = slots(rng); s > 0; --s)
      p += IntPoly::monomial(n * kd(rng), Int(coef(rng)));
    if (p.is_zero()) p = IntPoly(Int(1));
    REQUIRE(check_eval_fzeta(p, n).verdict == Verdict::holds);
    CHECK(check_motivic_f1(GrothClass(p)).verdict == Verdict::holds);
  }
}

TEST_CASE("the orders where eval-fzeta holds are the divisors of the support gcd") {
  std::uniform_int_distribution<long> slots(1, 5), coef(1, 9), kd(1, 24);
  for (int iter = 0; iter < 150; ++iter) {
    IntPoly p;
    for (long s = slots(rng); s > 0; --s)
      p += IntPoly::monomial(kd(rng), Int(coef(rng)));
    long g = 0;
    for (long k = 0; k <= p.degree(); ++k)
      if (p.coeff(k) != 0) g = std::gcd(g, k);
    REQUIRE(g >= 1);
    for (long n = 1; n <= p.degree(); ++n)
      CHECK((check_eval_fzeta(p, n).verdict == Verdict::holds) == (g % n == 0));
  }
}

TEST_CASE("partial-eval: explicit split verified exactly") {
  // N = q^2 + (q^2 - 1) q, split b = q^2, P = q
  const IntPoly n_poly = IntPoly::of({0, -1, 1, 1});
  const auto ok = check_partial_eval(
      n_poly, 2, PartialEvalSplit{IntPoly::monomial(2, Int(1)),
                                  IntPoly::monomial(1, Int(1))});
  CHECK(ok.verdict == Verdict::holds);
  CHECK(ok.certificate["canonical"] == false);

  // split that does not reconstruct the polynomial
  const auto bad = check_partial_eval(
      IntPoly::of({0, 1}), 2, PartialEvalSplit{IntPoly(), IntPoly(Int(1))});
  CHECK(bad.verdict == Verdict::fails);

  // b-part violating the divisibility/positivity shape
  const auto badb = check_partial_eval(
      IntPoly::of({0, 1}), 2,
      PartialEvalSplit{IntPoly::monomial(1, Int(1)), IntPoly()});
  CHECK(badb.verdict == Verdict::fails);

  // explicit split whose P goes negative on x >= 1 is a genuine failure
  IntPoly q2m1 = IntPoly::of({-1, 0, 1});
  IntPoly p_bad = IntPoly::of({-3, 1});
  const auto negp =
      check_partial_eval(q2m1 * p_bad, 2, PartialEvalSplit{IntPoly(), p_bad});
  CHECK(negp.verdict == Verdict::fails);
  CHECK(negp.witness["x"] == 1);
}

TEST_CASE("partial-eval: canonical heuristic") {
  // pure b-part polynomial: holds with P = 0
  const auto pure =
      check_partial_eval(IntPoly::of({2, 0, 0, 0, 3}), 2, std::nullopt);
  CHECK(pure.verdict == Verdict::holds);
  CHECK(pure.certificate["canonical"] == true);
  CHECK(pure.certificate["p"] == "0:0");

  // 1 + q + q^2 at n = 2: remainder q is not divisible by q^2 - 1
  const auto und = check_partial_eval(IntPoly::of({1, 1, 1}), 2, std::nullopt);
  CHECK(und.verdict == Verdict::undetermined);
  CHECK(und.extra["remainder"] == "1:1");

  // canonical split found but P fails positivity: stays undetermined
  // N = (q^2 - 1)(2q - 5q^3) has only odd exponents, so b = 0 and
  // P = 2q - 5q^3 with P(1) = -3.
  const IntPoly n_poly = IntPoly::of({-1, 0, 1}) * IntPoly::of({0, 2, 0, -5});
  const auto unlucky = check_partial_eval(n_poly, 2, std::nullopt);
  CHECK(unlucky.verdict == Verdict::undetermined);
  CHECK(unlucky.certificate["canonical"] == true);

  // the canonical heuristic never returns fails
  for (int iter = 0; iter < 300; ++iter) {
    std::uniform_int_distribution<long> nd(1, 5);
    const auto rep =
        check_partial_eval(random_poly(14, 30), nd(rng), std::nullopt);
    CHECK(rep.verdict != Verdict::fails);
  }
}

TEST_CASE("interp-positivity: frozen examples") {
  const auto t1 = check_interp_positivity(IntPoly::of({0, -1, 1}));  // q^2 - q
  CHECK(t1.verdict == Verdict::holds);
  CHECK(t1.extra["method"] == "torus-basis");

  const auto t2 = check_interp_positivity(IntPoly::of({-3, 1}));  // q - 3
  CHECK(t2.verdict == Verdict::fails);
  CHECK(t2.witness["x"] == 1);
  CHECK(t2.witness["value"] == "-2");

  const auto t3 = check_interp_positivity(IntPoly::of({1, -3, 1}));
  CHECK(t3.verdict == Verdict::fails);
  CHECK(t3.witness["x"] == 1);

  CHECK(check_interp_positivity(IntPoly()).verdict == Verdict::holds);
  CHECK(check_interp_positivity(IntPoly(Int(7))).verdict == Verdict::holds);

  // negative leading coefficient can never hold
  CHECK(check_interp_positivity(IntPoly::of({100, -1})).verdict ==
        Verdict::fails);

  // exhaustive route that holds: q^2 - q - 2 is negative only below x = 2...
  // actually (x-2)(x+1) < 0 at x = 1, so it fails; shift it up instead:
  // q^2 - q + 1 > 0 everywhere but has torus expansion T^2 + T + 1 (holds by
  // torus); use q^2 - 2q + 1 = (q-1)^2: torus basis T^2, holds.
  const auto sq = check_interp_positivity(IntPoly::of({1, -2, 1}));
  CHECK(sq.verdict == Verdict::holds);

  // genuinely exhaustive: q^2 - 3q + 3 > 0 for all integers, torus basis
  // T^2 - T + 1 has a negative entry.
  const auto ex = check_interp_positivity(IntPoly::of({3, -3, 1}));
  CHECK(ex.verdict == Verdict::holds);
  CHECK(ex.extra["method"] == "exhaustive");

  // dominance bound beyond the budget: undetermined, never a guess
  IntPoly wide = IntPoly::monomial(3, Int(1));
  wide += IntPoly::of({0, -2000000});  // bound ~ 2e6 > 1e6
  wide += IntPoly::of({2000000000});
  const auto und = check_interp_positivity(wide);
  CHECK(und.verdict == Verdict::undetermined);
}

TEST_CASE("interp-positivity reports the negative sample points below 1") {
  const auto rep = check_interp_positivity(IntPoly::of({3, -3, 1}));
  REQUIRE(rep.verdict == Verdict::holds);
  // values at 0, -1, ... are 3, 7, ... all positive here
  CHECK(rep.extra["negative_points"].empty());
  CHECK(rep.extra["tail_sign_at_minus_infinity"] == 1);
}

TEST_CASE("dual torification: even projective spaces hold (N = 1..6)") {
  for (long n = 1; n <= 6; ++n) {
    const auto rep = check_dual_torification(GrothClass(q_int(2 * n + 1)));
    CHECK(rep.verdict == Verdict::holds);
    if (n == 2) {
      CHECK(rep.certificate["dual"] ==
            nlohmann::json({{"0", "1"},
                            {"1", "2"},
                            {"2", "4"},
                            {"3", "3"},
                            {"4", "1"}}));
    }
  }
}

TEST_CASE("dual torification: frozen failures") {
  CHECK(check_dual_torification(GrothClass(IntPoly(Int(1)))).verdict ==
        Verdict::holds);

  // a single affine line: dual is -L with torus basis {0:-1, 1:-1}
  const auto line = check_dual_torification(GrothClass(IntPoly::of({0, 1})));
  CHECK(line.verdict == Verdict::fails);
  CHECK(line.witness["stage"] == "dual");

  // odd projective spaces fail the dual side
  for (long n = 1; n <= 4; ++n)
    CHECK(check_dual_torification(GrothClass(q_int(2 * n))).verdict ==
          Verdict::fails);

  // primal failure is detected first
  const auto primal = check_dual_torification(GrothClass(IntPoly::of({-2, 0, 1})));
  CHECK(primal.verdict == Verdict::fails);
  CHECK(primal.witness["stage"] == "primal");
}

TEST_CASE("dual class evaluates as the primal at negated points") {
  for (int iter = 0; iter < 200; ++iter) {
    // random torus-positive class so the primal side always passes
    std::map<long, Int> coeffs;
    std::uniform_int_distribution<long> k(0, 12), v(0, 20);
    for (int t = 0; t < 6; ++t) coeffs[k(rng)] += Int(v(rng));
    const GrothClass c = from_torus_basis(coeffs);
    const auto rep = check_dual_torification(c);  // must not throw
    REQUIRE(!rep.extra["dual_class"].is_null());
    const IntPoly dual = parse_poly(rep.extra["dual_class"].get<std::string>());
    const IntPoly primal = c.counting_poly();
    for (long x = -4; x <= 4; ++x)
      CHECK(dual.eval(Int(x)) == primal.eval(Int(-x)));
  }
}

TEST_CASE("punctured affine space and decomposition products") {
  CHECK(torify_punctured_affine(1).counts == std::map<long, Int>{{1, Int(1)}});
  CHECK(torify_punctured_affine(2).counts ==
        std::map<long, Int>{{1, Int(2)}, {2, Int(1)}});
  // reconstruction L^10 - 1
  const GrothClass rec = torify_punctured_affine(10).reconstruct();
  IntPoly expect = IntPoly::monomial(10, Int(1)) + IntPoly(Int(-1));
  CHECK(rec == GrothClass(expect));
  CHECK_THROWS_AS(torify_punctured_affine(0), std::invalid_argument);

  const TorusDecomposition gm{{{1, Int(1)}}};
  CHECK(product_decomposition(gm, gm).counts ==
        std::map<long, Int>{{2, Int(1)}});
  const TorusDecomposition pt{{{0, Int(1)}}};
  const TorusDecomposition a2 = torify_punctured_affine(2);
  CHECK(product_decomposition(a2, pt).counts == a2.counts);
  CHECK(product_decomposition(a2, gm).counts ==
        std::map<long, Int>{{2, Int(2)}, {3, Int(1)}});
  // product certificate reconstructs the product class
  CHECK(product_decomposition(a2, gm).reconstruct() ==
        a2.reconstruct() * gm.reconstruct());
}

TEST_CASE("torus decomposition construction validates") {
  CHECK_THROWS_AS(TorusDecomposition({{1, Int(-1)}}), std::invalid_argument);
  CHECK_THROWS_AS(TorusDecomposition({{-1, Int(1)}}), std::invalid_argument);
  const TorusDecomposition z{{{2, Int(0)}, {3, Int(4)}}};
  CHECK(z.counts == std::map<long, Int>{{3, Int(4)}});
  CHECK_THROWS_AS(CellDecomposition({{0, Int(-2)}}), std::invalid_argument);
  CHECK(CellDecomposition({{0, Int(1)}, {2, Int(3)}}).counting_poly() ==
        IntPoly::of({1, 0, 3}));
}
