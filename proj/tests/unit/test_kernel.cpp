#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "thv/errors.hpp"
#include "thv/linalg.hpp"
#include "thv/param_poly.hpp"
#include "thv/rational.hpp"

using namespace thv;

namespace {

ParamPoly P(const char* s) { return ParamPoly::parse(s); }
ParamPoly var(Param p) { return ParamPoly::var(p); }

}  // namespace

TEST_CASE("rational canonical form") {
  CHECK(Rational(6, -4).str() == "-3/2");
  CHECK(Rational(0, 5).str() == "0");
  CHECK(Rational(0, 5).denominator() == 1);
  CHECK(Rational(4, 2).str() == "2");
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK(Rational::parse(" 7 ") == Rational(7));
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/-2"), ParseError);
  CHECK_THROWS_AS(Rational::parse("x"), ParseError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-7, 2).ceil() == -3);
  CHECK(binomial(Rational(-2), 3) == Rational(-4));
  CHECK(binomial(Rational(1, 2), 2) == Rational(-1, 8));
}

TEST_CASE("poly_add examples") {
  CHECK((var(Param::l1) + (-var(Param::l1))).is_zero());
  CHECK((2 * var(Param::h)) + (var(Param::h) + ParamPoly(Rational(1, 2))) == P("3*h + 1/2"));
  CHECK(((2 * var(Param::h)) + (var(Param::h) + ParamPoly(Rational(1, 2)))).str() == "3*h + 1/2");
  const ParamPoly s = var(Param::l2).pow(2) + var(Param::l2);
  CHECK(s.terms().size() == 2);
  CHECK(s.str() == "l2^2 + l2");
}

TEST_CASE("poly_mul examples") {
  CHECK((var(Param::h) * ParamPoly(0)).is_zero());
  CHECK((var(Param::l2) + 1) * (var(Param::l2) - 1) == var(Param::l2).pow(2) - 1);
  CHECK(((var(Param::l2) + 1) * (var(Param::l2) - 1)).str() == "l2^2 - 1");
  CHECK((ParamPoly(12) * var(Param::l2).pow(2)).str() == "12*l2^2");
}

TEST_CASE("poly_eval examples") {
  CHECK(P("l1/2").eval({{Param::l1, 1}}) == Rational(1, 2));
  CHECK(P("2*h").eval({{Param::h, Rational(3, 4)}}) == Rational(3, 2));
  // c = l1 - 1 + 12 l2^2 / l3 with the l3 denominator cleared.
  const ParamPoly cleared = (var(Param::l1) - 1) * var(Param::l3) + 12 * var(Param::l2).pow(2);
  CHECK(cleared.eval({{Param::l1, 26}, {Param::l2, 0}, {Param::l3, 1}}) == Rational(25));
  CHECK_THROWS_AS(P("l1 + h").eval({{Param::l1, 1}}), UnboundParameter);
  // Unused parameters need no binding.
  CHECK(P("3").eval({}) == Rational(3));
}

TEST_CASE("text form") {
  CHECK(P("h^2*l1 - 2*a + 1/3").str() == "l1*h^2 - 2*a + 1/3");
  CHECK(P("0").str() == "0");
  CHECK(P("-(l1 + 1)^2").str() == "-l1^2 - 2*l1 - 1");
  CHECK_THROWS_AS(P("l1 +"), ParseError);
  CHECK_THROWS_AS(P("q1"), ParseError);
  CHECK_THROWS_AS(P("L[2]"), ParseError);
  CHECK_THROWS_AS(P("1/l1"), ParseError);
}

TEST_CASE("graded-lex canonical order") {
  // Higher total degree first, ties broken lexicographically with l1 first.
  CHECK(P("h + l1^2 + l2*l3 + l1").str() == "l1^2 + l2*l3 + l1 + h");
  CHECK(P("a*l1 + l1*l2").str() == "l1*l2 + l1*a");
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = testing::random_poly(rng), b = testing::random_poly(rng), c = testing::random_poly(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(ParamPoly::parse(a.str()) == a);
  }
}

TEST_CASE("eval is a ring homomorphism") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = testing::random_poly(rng), b = testing::random_poly(rng);
    const auto x = testing::random_assignment(rng);
    CHECK((a * b).eval(x) == a.eval(x) * b.eval(x));
    CHECK((a + b).eval(x) == a.eval(x) + b.eval(x));
  }
}

TEST_CASE("substitute and coefficient extraction") {
  const ParamPoly p = P("a^2*l3 - l3 + a*l2");
  const auto coeffs = p.coefficients_in(Param::a);
  REQUIRE(coeffs.size() == 3);
  CHECK(coeffs[0] == P("-l3"));
  CHECK(coeffs[1] == P("l2"));
  CHECK(coeffs[2] == P("l3"));
  CHECK(p.substitute({{Param::l3, ParamPoly(2)}, {Param::l2, ParamPoly(0)}}) == P("2*a^2 - 2"));
  CHECK(P("-2*a*l2 + 2*l2").monic() == P("a*l2 - l2"));
}

TEST_CASE("exact rank and nullspace") {
  RationalMatrix m{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  CHECK(rank(m, 3) == 2);
  const auto ns = nullspace(m, 3);
  REQUIRE(ns.size() == 1);
  for (const auto& row : m) {
    Rational dot = 0;
    for (std::size_t j = 0; j < 3; ++j) dot += row[j] * ns[0][j];
    CHECK(dot.is_zero());
  }
  CHECK(rank(RationalMatrix{}, 0) == 0);
  CHECK(nullspace(RationalMatrix{{0, 0}}, 2).size() == 2);
}
