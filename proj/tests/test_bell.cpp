#include "doctest.h"

#include "norlund/bell.hpp"
#include "norlund/errors.hpp"
#include "oracles.hpp"

using namespace norlund;

TEST_CASE("complete Bell polynomials against set partitions") {
  oracle::Gen g(21);
  for (int trial = 0; trial < 5; ++trial) {
    const auto a = g.vec(8);
    const auto table = complete_bell_table<Rational>(8, a);
    for (std::size_t n = 0; n <= 8; ++n) {
      const auto expect = oracle::bell_by_partitions(n, a);
      CHECK(table[n] == expect);
      CHECK(complete_bell_via_gf<Rational>(n, a) == expect);
    }
  }
}

TEST_CASE("Bell numbers from all-ones arguments") {
  const std::vector<Rational> ones(10, Rational(1));
  const long bell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975};
  const auto t = complete_bell_table<Rational>(10, ones);
  for (std::size_t n = 0; n <= 10; ++n) CHECK(t[n] == Rational(bell[n]));
}

TEST_CASE("Bell polynomial small cases") {
  const std::vector<Rational> a{Rational(2), Rational(3), Rational(5)};
  CHECK(complete_bell<Rational>(0, a) == Rational(1));
  CHECK(complete_bell<Rational>(1, a) == Rational(2));
  CHECK(complete_bell<Rational>(2, a) == Rational(7));    // a1^2 + a2
  CHECK(complete_bell<Rational>(3, a) == Rational(31));   // a1^3 + 3 a1 a2 + a3
  CHECK_THROWS_AS(complete_bell<Rational>(4, a), DomainError);
}

TEST_CASE("moments and cumulants are inverse") {
  oracle::Gen g(22);
  const auto kappa = g.vec(9);
  const auto mu = moments_from_cumulants(kappa);
  CHECK(cumulants_from_moments(mu) == kappa);
  // standard normal: mu_4 = 3
  const std::vector<Rational> normal{Rational(0), Rational(1), Rational(0), Rational(0)};
  CHECK(moments_from_cumulants(normal)[3] == Rational(3));
}
