#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>
#include <string>

#include "fzeta/habiro.hpp"
#include "fzeta/polyio.hpp"
#include "fzeta/qseries.hpp"

using namespace fzeta;

namespace {

std::mt19937_64 rng(0xab1e);

IntPoly random_poly(long max_deg, long coeff_bound) {
  std::uniform_int_distribution<long> deg(-1, max_deg);
  std::uniform_int_distribution<long> c(-coeff_bound, coeff_bound);
  const long d = deg(rng);
  std::vector<Int> v;
  for (long i = 0; i <= d; ++i) v.emplace_back(c(rng));
  return IntPoly(std::move(v));
}

long random_level() {
  std::uniform_int_distribution<long> l(1, 8);
  return l(rng);
}

// sum_{m<n} alpha_m (q)_m for the gl layer rule alpha_m = q^(m(m-1)/2)
IntPoly gl_truncation(long n) {
  IntPoly acc;
  for (long m = 0; m < n; ++m)
    acc += IntPoly::monomial(m * (m - 1) / 2, Int(1)) * pochhammer_qminus(m);
  return acc;
}

}  // namespace

TEST_CASE("construction: frozen reductions") {
  CHECK(HabiroElement(2, pochhammer_qminus(2)).rep().is_zero());
  CHECK(HabiroElement(1, IntPoly::of({0, 0, 1})).rep() == IntPoly(Int(1)));
  const IntPoly p = IntPoly::monomial(1, Int(1)) * pochhammer_qminus(2);
  CHECK(HabiroElement(3, p).rep() == p);  // degree 4 < 6, untouched
  CHECK_THROWS_AS(HabiroElement(0, IntPoly(Int(1))), std::invalid_argument);
}

TEST_CASE("quotient consistency on 200+ random instances") {
  for (int iter = 0; iter < 220; ++iter) {
    const long n = random_level();
    const IntPoly p = random_poly(40, 100);
    const IntPoly g = random_poly(10, 50);
    const HabiroElement a(n, p);
    CHECK(HabiroElement(n, p + g * habiro_modulus(n)) == a);
    CHECK(a.rep().degree() < n * (n + 1) / 2);
    // p - rep is in the ideal
    CHECK(divrem_unit(p - a.rep(), habiro_modulus(n)).rem.is_zero());
  }
}

TEST_CASE("ring structure descends from polynomials") {
  for (int iter = 0; iter < 220; ++iter) {
    const long n = random_level();
    const IntPoly pa = random_poly(30, 80), pb = random_poly(30, 80);
    const HabiroElement a(n, pa), b(n, pb);
    CHECK(habiro_add(a, b) == HabiroElement(n, pa + pb));
    CHECK(habiro_mul(a, b) == HabiroElement(n, pa * pb));
    CHECK(habiro_sub(a, b) == HabiroElement(n, pa - pb));
    CHECK(habiro_mul(a, HabiroElement(n, IntPoly(Int(1)))) == a);
  }
  // (q - 1) * (q^2-1)...(q^N-1) generates the ideal: product is zero
  for (long n = 2; n <= 8; ++n) {
    const IntPoly rest = divide_exact(habiro_modulus(n), IntPoly::of({-1, 1}));
    CHECK(habiro_mul(HabiroElement(n, IntPoly::of({-1, 1})),
                     HabiroElement(n, rest))
              .rep()
              .is_zero());
  }
  CHECK_THROWS_AS(habiro_add(HabiroElement(2, IntPoly(Int(1))),
                             HabiroElement(3, IntPoly(Int(1)))),
                  std::invalid_argument);
}

TEST_CASE("projection compatibility on 200+ random instances") {
  for (int iter = 0; iter < 220; ++iter) {
    const long n = random_level();
    std::uniform_int_distribution<long> lo(1, n);
    const long k = lo(rng);
    const IntPoly pa = random_poly(35, 90), pb = random_poly(35, 90);
    const HabiroElement a(n, pa), b(n, pb);
    CHECK(habiro_project(a, k) == HabiroElement(k, pa));
    CHECK(habiro_project(habiro_mul(a, b), k) ==
          habiro_mul(habiro_project(a, k), habiro_project(b, k)));
    CHECK(habiro_project(habiro_add(a, b), k) ==
          habiro_add(habiro_project(a, k), habiro_project(b, k)));
    CHECK(habiro_project(a, n) == a);
  }
  CHECK_THROWS_AS(habiro_project(HabiroElement(2, IntPoly(Int(1))), 3),
                  std::invalid_argument);
}

TEST_CASE("normal form: frozen small expansions") {
  // q = 1 + (q - 1)
  const auto nf1 = normal_form(HabiroElement(3, IntPoly::of({0, 1})));
  REQUIRE(nf1.parts.size() == 3);
  CHECK(nf1.parts[0] == IntPoly(Int(1)));
  CHECK(nf1.parts[1] == IntPoly(Int(1)));
  CHECK(nf1.parts[2].is_zero());
  // q^2 = 1 + (1 + q)(q - 1)
  const auto nf2 = normal_form(HabiroElement(3, IntPoly::of({0, 0, 1})));
  CHECK(nf2.parts[0] == IntPoly(Int(1)));
  CHECK(nf2.parts[1] == IntPoly::of({1, 1}));
  CHECK(nf2.parts[2].is_zero());
  // zero expands to all-zero parts
  const auto nf0 = normal_form(HabiroElement(4, IntPoly()));
  for (const auto& part : nf0.parts) CHECK(part.is_zero());
}

TEST_CASE("normal form: roundtrip, degree bounds, uniqueness (200+ instances)") {
  for (int iter = 0; iter < 220; ++iter) {
    const long n = random_level();
    const HabiroElement a(n, random_poly(40, 120));
    const auto nf = normal_form(a);
    REQUIRE(nf.parts.size() == static_cast<std::size_t>(n));
    for (std::size_t m = 0; m < nf.parts.size(); ++m)
      CHECK(nf.parts[m].degree() <= static_cast<long>(m));
    CHECK(from_normal_form(nf) == a);
  }
  // uniqueness: assembling valid random parts and re-expanding returns them
  for (int iter = 0; iter < 220; ++iter) {
    const long n = random_level();
    HabiroNormalForm nf;
    nf.level = n;
    std::uniform_int_distribution<long> c(-9, 9);
    for (long m = 0; m < n; ++m) {
      std::vector<Int> v;
      for (long i = 0; i <= m; ++i) v.emplace_back(c(rng));
      nf.parts.emplace_back(std::move(v));
    }
    const auto back = normal_form(from_normal_form(nf));
    REQUIRE(back.parts.size() == nf.parts.size());
    for (std::size_t m = 0; m < nf.parts.size(); ++m)
      CHECK(back.parts[m] == nf.parts[m]);
  }
  // malformed forms are rejected
  HabiroNormalForm bad;
  bad.level = 2;
  bad.parts = {IntPoly::of({1, 1})};  // degree 1 > 0 at m = 0
  CHECK_THROWS_AS(from_normal_form(bad), std::invalid_argument);
}

TEST_CASE("ev_n is a ring homomorphism (200+ instances)") {
  for (int iter = 0; iter < 220; ++iter) {
    const long level = random_level();
    std::uniform_int_distribution<long> nn(1, level);
    const long n = nn(rng);
    const HabiroElement a(level, random_poly(30, 60));
    const HabiroElement b(level, random_poly(30, 60));
    const IntPoly qn1 = IntPoly::monomial(n, Int(1)) + IntPoly(Int(-1));
    const IntPoly sum = divrem_unit(ev_n(a, n) + ev_n(b, n), qn1).rem;
    const IntPoly prod = divrem_unit(ev_n(a, n) * ev_n(b, n), qn1).rem;
    CHECK(ev_n(habiro_add(a, b), n) == sum);
    CHECK(ev_n(habiro_mul(a, b), n) == prod);
    CHECK(ev_n(a, n).degree() < n);
    // ev_1 is evaluation at q = 1
    CHECK(ev_n(a, 1) == IntPoly(a.rep().eval(Int(1))));
  }
}

TEST_CASE("ev_n: frozen values and level guard") {
  // the class of L^3 + L at n = 2
  CHECK(ev_n(HabiroElement(3, IntPoly::of({0, 1, 0, 1})), 2) ==
        IntPoly::monomial(1, Int(2)));
  // gl truncation at level 3: 1 + (q-1) + q(q-1)(q^2-1) reduces to q mod q^2-1
  CHECK(ev_n(HabiroElement(3, gl_truncation(3)), 2) == IntPoly::of({0, 1}));
  try {
    ev_n(HabiroElement(2, IntPoly(Int(1))), 3);
    FAIL("expected a level error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("insufficient truncation level") !=
          std::string::npos);
  }
}

TEST_CASE("ev_zeta: homomorphism and factoring through ev_n (200+ instances)") {
  for (int iter = 0; iter < 220; ++iter) {
    const long level = random_level();
    std::uniform_int_distribution<long> nn(1, level);
    const long n = nn(rng);
    const RootOfUnity z(n, 1);
    const HabiroElement a(level, random_poly(30, 60));
    const HabiroElement b(level, random_poly(30, 60));
    CHECK(ev_zeta(habiro_add(a, b), z) == ev_zeta(a, z) + ev_zeta(b, z));
    CHECK(ev_zeta(habiro_mul(a, b), z) == ev_zeta(a, z) * ev_zeta(b, z));
    CHECK(ev_zeta(a, z) == eval_root(ev_n(a, n), z));
  }
  CHECK_THROWS_AS(ev_zeta(HabiroElement(2, IntPoly(Int(1))), RootOfUnity(3, 1)),
                  std::invalid_argument);
}

TEST_CASE("ev_zeta: frozen values") {
  // gl truncation at zeta = -1: every layer with m >= 2 vanishes
  const CyclotomicInt at_m1 =
      ev_zeta(HabiroElement(4, gl_truncation(4)), RootOfUnity(2, 1));
  CHECK(at_m1.as_integer() == -1);
  // sigma truncation at zeta = 1: the constant layer 1 + q survives as 2
  IntPoly sigma_full = IntPoly::of({1, 1});
  IntPoly sigma_tail;
  for (long m = 1; m < 8; ++m)
    sigma_tail += IntPoly::monomial(m + 1, Int(1)) * pochhammer_qminus(m);
  const RootOfUnity one(1, 1);
  CHECK(ev_zeta(HabiroElement(8, sigma_full + sigma_tail), one).as_integer() ==
        2);
  // the variant without the leading 1 gives the value 1
  const IntPoly variant = IntPoly::of({0, 1}) + sigma_tail;
  CHECK(ev_zeta(HabiroElement(8, variant), one).as_integer() == 1);
  // zero maps to zero at any root
  CHECK(ev_zeta(HabiroElement(5, IntPoly()), RootOfUnity(4, 1)).is_zero());
}

TEST_CASE("taylor coefficients at roots of unity") {
  // constant 1: [1, 0, 0]
  const auto c1 = taylor_zeta(HabiroElement(6, IntPoly(Int(1))),
                              RootOfUnity(2, 1), 3);
  REQUIRE(c1.size() == 3);
  CHECK(c1[0] == CyclotomicInt(2, IntPoly(Int(1))));
  CHECK(c1[1].is_zero());
  CHECK(c1[2].is_zero());
  // rep = q: [zeta, 1]
  const RootOfUnity z3(3, 1);
  const auto cq = taylor_zeta(HabiroElement(6, IntPoly::of({0, 1})), z3, 2);
  CHECK(cq[0] == eval_root(IntPoly::of({0, 1}), z3));
  CHECK(cq[1] == CyclotomicInt(3, IntPoly(Int(1))));
  // rep = (q-1)(q^2-1) at zeta = -1: first coefficient vanishes
  const auto cv = taylor_zeta(HabiroElement(3, pochhammer_qminus(2)),
                              RootOfUnity(2, 1), 1);
  CHECK(cv[0].is_zero());
  // count bound: level/order coefficients are the most we may ask for
  CHECK_THROWS_AS(taylor_zeta(HabiroElement(5, IntPoly(Int(1))),
                              RootOfUnity(2, 1), 3),
                  std::invalid_argument);
}

TEST_CASE("taylor: coefficient 0 is ev_zeta; products follow the Cauchy rule") {
  for (int iter = 0; iter < 200; ++iter) {
    const long level = 8;
    for (long order : {1L, 2L, 4L}) {
      const long K = level / order;
      const RootOfUnity z(order, 1);
      const HabiroElement a(level, random_poly(25, 40));
      const HabiroElement b(level, random_poly(25, 40));
      const auto ta = taylor_zeta(a, z, K);
      const auto tb = taylor_zeta(b, z, K);
      const auto tp = taylor_zeta(habiro_mul(a, b), z, K);
      CHECK(ta[0] == ev_zeta(a, z));
      for (long j = 0; j < K; ++j) {
        CyclotomicInt acc(order, IntPoly());
        for (long i = 0; i <= j; ++i)
          acc = acc + ta[static_cast<std::size_t>(i)] *
                          tb[static_cast<std::size_t>(j - i)];
        CHECK(tp[static_cast<std::size_t>(j)] == acc);
      }
    }
  }
}

TEST_CASE("frobenius: identity, multiplicativity, divisibility") {
  for (int iter = 0; iter < 220; ++iter) {
    const long level = random_level();
    std::uniform_int_distribution<long> nn(1, 4);
    const long n = nn(rng);
    const HabiroElement a(level, random_poly(25, 50));
    const HabiroElement b(level, random_poly(25, 50));
    CHECK(frobenius(a, 1) == a);
    CHECK(frobenius(habiro_mul(a, b), n) ==
          habiro_mul(frobenius(a, n), frobenius(b, n)));
    CHECK(frobenius(habiro_add(a, b), n) ==
          habiro_add(frobenius(a, n), frobenius(b, n)));
    // well-definedness: the ideal maps into itself
    const IntPoly g = random_poly(8, 30);
    CHECK(frobenius(HabiroElement(level, g * habiro_modulus(level)), n)
              .rep()
              .is_zero());
  }
  // sigma_2((q)_2) = (q^2-1)(q^4-1) is divisible by (q-1)(q^2-1)
  CHECK(HabiroElement(2, pochhammer_qminus(2).substitute_power(2))
            .rep()
            .is_zero());
  // frozen: q -> q^2 at level 2 stays q^2 (degree 2 < 3)
  CHECK(frobenius(HabiroElement(2, IntPoly::of({0, 1})), 2).rep() ==
        IntPoly::of({0, 0, 1}));
}

TEST_CASE("inverse of the Lefschetz class: identity for N = 1..10") {
  for (long n = 1; n <= 10; ++n) {
    const HabiroElement inv = inverse_lefschetz(n);
    const HabiroElement q(n, IntPoly::of({0, 1}));
    CHECK(habiro_mul(q, inv) == HabiroElement(n, IntPoly(Int(1))));
    // ev compatibility for every n' <= n
    for (long k = 1; k <= n; ++k) {
      const IntPoly qk1 = IntPoly::monomial(k, Int(1)) + IntPoly(Int(-1));
      const IntPoly prod = ev_n(inv, k) * IntPoly::of({0, 1});
      CHECK(divrem_unit(prod, qk1).rem == IntPoly(Int(1)));
    }
  }
  CHECK(inverse_lefschetz(1).rep() == IntPoly(Int(1)));
  CHECK(inverse_lefschetz(2).rep() == IntPoly::of({1, 1, -1}));
}

TEST_CASE("ind-family F1 layer checks") {
  const IndFamilySpec sigma{"sigma", [](long m) {
                              if (m == 0) return IntPoly::of({1, 1});
                              return IntPoly::monomial(m + 1, Int(1));
                            }};
  const auto ok = check_ind_f1(sigma, 13);
  CHECK(ok.verdict == Verdict::holds);
  CHECK(ok.certificate["layers"].size() == 13);

  const IndFamilySpec bad{"bad", [](long m) {
                            return m == 2 ? IntPoly::of({-2, 1})
                                          : IntPoly(Int(1));
                          }};
  const auto rep = check_ind_f1(bad, 5);
  CHECK(rep.verdict == Verdict::fails);
  CHECK(rep.witness["layer"] == 2);

  CHECK(check_ind_f1(sigma, 0).verdict == Verdict::holds);  // vacuous
}

TEST_CASE("ind-family evaluation sign checks") {
  const IndFamilySpec sigma{"sigma", [](long m) {
                              if (m == 0) return IntPoly::of({1, 1});
                              return IntPoly::monomial(m + 1, Int(1));
                            }};
  const auto s4 = check_ind_fzeta(sigma, 4, EvalConvention::one_minus_n);
  CHECK(s4.verdict == Verdict::holds);
  CHECK(s4.extra["value"] == "73402");
  CHECK(s4.extra["eval_point"] == -3);

  const IndFamilySpec gl{"gl", [](long m) {
                           return IntPoly::monomial(m * (m - 1) / 2, Int(1));
                         }};
  const auto g2 = check_ind_fzeta(gl, 2, EvalConvention::one_minus_n);
  CHECK(g2.verdict == Verdict::fails);
  CHECK(g2.extra["value"] == "-1");

  // the alternative convention evaluates at -n
  const auto alt = check_ind_fzeta(sigma, 2, EvalConvention::minus_n);
  CHECK(alt.extra["eval_point"] == -2);

  CHECK(check_ind_fzeta(sigma, 0).verdict == Verdict::holds);
}

TEST_CASE("constructible aggregate positivity") {
  // a bare torus
  const auto torus = check_constructible_f1({{IntPoly::of({-1, 1})}});
  CHECK(torus.verdict == Verdict::holds);

  // the first Kontsevich pair product alone: (q^2 - 2)(q - 1)
  const IntPoly pair1 = IntPoly::of({-2, 0, 1}) * IntPoly::of({-1, 1});
  const auto alone = check_constructible_f1({{pair1}});
  CHECK(alone.verdict == Verdict::fails);
  CHECK(alone.witness["t_exponent"] == 1);
  CHECK(alone.witness["coefficient"] == "-1");

  // grouping repairs nothing here, but the per-group report is complete
  const auto both = check_constructible_f1({{IntPoly::of({-1, 1})}, {pair1}});
  CHECK(both.verdict == Verdict::fails);
  CHECK(both.witness["group"] == 1);
  CHECK(both.extra["groups"].size() == 2);
}
