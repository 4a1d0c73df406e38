#include "doctest.h"

#include "norlund/binomial.hpp"
#include "norlund/errors.hpp"
#include "norlund/rational.hpp"
#include "norlund/unipoly.hpp"
#include "oracles.hpp"

using namespace norlund;

TEST_CASE("rational text format") {
  CHECK(Rational(-691, 2730).str() == "-691/2730");
  CHECK(Rational(6, 2).str() == "3");
  CHECK(Rational(2, -4).str() == "-1/2");
  CHECK(Rational::parse("-3/6") == Rational(-1, 2));
  CHECK(Rational::parse("+7") == Rational(7));
  CHECK_FALSE(Rational::try_parse("1/0").has_value());
  CHECK_FALSE(Rational::try_parse("abc").has_value());
  CHECK_FALSE(Rational::try_parse("").has_value());
  CHECK_THROWS_AS(Rational::parse("1/"), DomainError);
}

TEST_CASE("rational arithmetic and errors") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) * Rational(-2, 3) == Rational(-1, 3));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(Rational(0).pow(0) == Rational(1));
  CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
  CHECK_THROWS_AS(Rational(0).inverse(), DomainError);
  CHECK_THROWS(Rational(1, 0));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(factorial(10) == Rational(3628800));
}

TEST_CASE("rational round trip") {
  oracle::Gen g(11);
  for (int i = 0; i < 200; ++i) {
    const auto r = g.rational(1000);
    CHECK(Rational::parse(r.str()) == r);
  }
}

TEST_CASE("exact rational powers") {
  CHECK(rational_power(Rational(4, 9), Rational(1, 2)) == Rational(2, 3));
  CHECK(rational_power(Rational(-8), Rational(1, 3)) == Rational(-2));
  CHECK(rational_power(Rational(8), Rational(-2, 3)) == Rational(1, 4));
  CHECK_FALSE(rational_power(Rational(2), Rational(1, 2)).has_value());
  CHECK_FALSE(rational_power(Rational(-4), Rational(1, 2)).has_value());
}

TEST_CASE("binomial table matches the product formula") {
  for (std::size_t n = 0; n <= 40; ++n)
    for (std::size_t k = 0; k <= n + 1; ++k) CHECK(binomial(n, k) == oracle::binom(n, k));
}

TEST_CASE("univariate polynomials") {
  const UniPoly s = UniPoly::variable();
  const UniPoly p = (s - UniPoly::constant(1)) * (s - UniPoly::constant(2));
  CHECK(p == UniPoly({2, -3, 1}));
  CHECK(p.degree() == 2);
  CHECK(UniPoly().degree() == -1);
  CHECK((p - p).is_zero());
  CHECK(p.eval(Rational(3)) == Rational(2));
  CHECK(p.shifted(Rational(1)) == UniPoly({0, -1, 1}));
  CHECK(p.pretty() == "s^2 - 3*s + 2");
  CHECK(UniPoly::from_roots({Rational(1), Rational(2)}) == p);

  oracle::Gen g(5);
  for (int i = 0; i < 50; ++i) {
    const UniPoly a(g.vec(5)), b(g.vec(4));
    const auto x = g.rational();
    CHECK((a * b).eval(x) == a.eval(x) * b.eval(x));
    CHECK(a.shifted(x).eval(Rational(0)) == a.eval(x));
  }
}
