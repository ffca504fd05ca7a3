#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "fzeta/polyio.hpp"

using namespace fzeta;

TEST_CASE("sparse parse") {
  CHECK(parse_poly("0:1;3:1") == IntPoly::of({1, 0, 0, 1}));
  CHECK(parse_poly("3:1;0:1") == IntPoly::of({1, 0, 0, 1}));  // any order
  CHECK(parse_poly("2:-5") == IntPoly::monomial(2, Int(-5)));
  CHECK(parse_poly("0:0").is_zero());
  // duplicate keys accumulate
  CHECK(parse_poly("1:2;1:3") == IntPoly::monomial(1, Int(5)));
  // big coefficients survive exactly
  CHECK(parse_poly("0:123456789012345678901234567890").coeff(0) ==
        Int("123456789012345678901234567890"));
}

TEST_CASE("dense parse") {
  CHECK(parse_poly("1,2,3") == IntPoly::of({1, 2, 3}));
  CHECK(parse_poly("5") == IntPoly::of({5}));
  CHECK(parse_poly("-7") == IntPoly::of({-7}));
  CHECK(parse_poly("0,0,0").is_zero());
  CHECK(parse_poly("0,0,1") == IntPoly::monomial(2, Int(1)));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_poly(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("1:x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("a,b"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("1:"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly(":2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("-1:3"), std::invalid_argument);  // negative exp
  CHECK_THROWS_AS(parse_laurent("x:1"), std::invalid_argument);
}

TEST_CASE("laurent parse accepts negative exponents") {
  const LaurentPoly p = parse_laurent("-2:3;0:1");
  CHECK(p.coeff(-2) == 3);
  CHECK(p.coeff(0) == 1);
  CHECK(p.min_exp() == -2);
  CHECK(parse_laurent("1,2,3") == LaurentPoly(IntPoly::of({1, 2, 3})));
}

TEST_CASE("format: canonical ascending sparse form") {
  CHECK(format_poly(IntPoly::of({1, 0, 0, 1})) == "0:1;3:1");
  CHECK(format_poly(IntPoly()) == "0:0");
  CHECK(format_laurent(LaurentPoly(IntPoly::of({3}), -2)) == "-2:3");
  CHECK(format_laurent(LaurentPoly()) == "0:0");
}

TEST_CASE("roundtrips on random polynomials") {
  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<long> deg(-1, 30);
  std::uniform_int_distribution<long> c(-100, 100);
  std::uniform_int_distribution<long> off(-10, 10);
  for (int iter = 0; iter < 300; ++iter) {
    std::vector<Int> v;
    const long d = deg(rng);
    for (long i = 0; i <= d; ++i) v.emplace_back(c(rng));
    const IntPoly p{IntPoly(v)};
    CHECK(parse_poly(format_poly(p)) == p);
    const LaurentPoly lp(p, off(rng));
    CHECK(parse_laurent(format_laurent(lp)) == lp);
  }
}

TEST_CASE("pretty printing") {
  CHECK(pretty_poly(IntPoly()) == "0");
  CHECK(pretty_poly(IntPoly::of({1})) == "1");
  CHECK(pretty_poly(IntPoly::of({0, 1})) == "q");
  CHECK(pretty_poly(IntPoly::of({-1, 0, 1})) == "q^2 - 1");
  CHECK(pretty_poly(IntPoly::of({2, -3, 1}), "x") == "x^2 - 3*x + 2");
  CHECK(pretty_laurent(LaurentPoly(IntPoly::of({1}), -1)) == "q^-1");
}
