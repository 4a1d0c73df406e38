#include "doctest.h"

#include "norlund/errors.hpp"
#include "norlund/higher_order.hpp"
#include "oracles.hpp"

using namespace norlund;

namespace {

std::vector<Rational> random_weights(oracle::Gen& g, std::size_t m) {
  std::vector<Rational> d;
  for (std::size_t i = 0; i < m; ++i) d.push_back(g.nonzero(4));
  return d;
}

}  // namespace

TEST_CASE("higher-order Bernoulli small cases") {
  const std::vector<Rational> ones3(3, Rational(1));
  CHECK(bernoulli_ho_gf(2, ones3) == UniPoly({2, -3, 1}));
  const std::vector<Rational> ones2(2, Rational(1));
  CHECK(bernoulli_ho_gf(2, ones2) == UniPoly({Rational(5, 6), -2, 1}));
  const std::vector<Rational> one(1, Rational(1));
  CHECK(bernoulli_ho_gf(2, one) == bernoulli_poly(2));
  CHECK(bernoulli_ho_gf(0, ones3) == UniPoly::constant(1));
}

TEST_CASE("higher-order Bernoulli against the product oracle") {
  oracle::Gen g(31);
  for (std::size_t m = 1; m <= 4; ++m) {
    for (int trial = 0; trial < 3; ++trial) {
      const auto d = random_weights(g, m);
      const auto expect = oracle::bernoulli_ho(d, 10);
      CHECK(bernoulli_ho_gf_table(d, 10) == expect);
      CHECK(bernoulli_ho_bell_table(d, 10) == expect);
      const auto s = g.rational();
      const auto values = bernoulli_ho_values(d, s, 10);
      for (std::size_t n = 0; n <= 10; ++n) CHECK(values[n] == expect[n].eval(s));
      for (std::size_t n = m; n <= 10; ++n) CHECK(bernoulli_ho_from_eulerian(n, d) == expect[n]);
    }
  }
}

TEST_CASE("higher-order Euler and Eulerian against the product oracle") {
  oracle::Gen g(32);
  for (std::size_t m = 1; m <= 3; ++m) {
    const auto d = random_weights(g, m);
    const std::vector<Rational> neg(m, Rational(-1)), one(m, Rational(1));
    CHECK(euler_ho_gf_table(d, 8) == oracle::eulerian_ho(d, neg, one, 8));

    std::vector<Rational> rho, alpha;
    for (std::size_t i = 0; i < m; ++i) {
      rho.push_back(Rational(i % 2 == 0 ? -1 : 2, static_cast<long>(i + 2)));
      alpha.push_back(Rational(static_cast<long>(i), 3));
    }
    const ParamSet p{d, rho, alpha};
    const auto expect = oracle::eulerian_ho(d, rho, alpha, 8);
    CHECK(eulerian_ho_gf_table(p, 8) == expect);
    const auto s = g.rational();
    const auto values = eulerian_ho_values(p, s, 8);
    for (std::size_t n = 0; n <= 8; ++n) CHECK(values[n] == expect[n].eval(s));
  }
}

TEST_CASE("uniform Eulerian Bell and recurrence routes") {
  oracle::Gen g(33);
  for (const auto& [rho, alpha] : std::vector<std::pair<Rational, Rational>>{
           {Rational(1, 2), Rational(0)}, {Rational(-1), Rational(1)}, {Rational(2), Rational(1, 3)}}) {
    for (std::size_t m = 1; m <= 3; ++m) {
      const auto p = ParamSet::uniform(random_weights(g, m), rho, alpha);
      const auto expect = oracle::eulerian_ho(p.d, p.rho, p.alpha, 9);
      CHECK(eulerian_ho_bell_table(p, 9) == expect);
      CHECK(eulerian_ho_recurrence_table(p, 9) == expect);
    }
  }
}

TEST_CASE("power sums") {
  const std::vector<Rational> d{Rational(1), Rational(2), Rational(-1, 2)};
  const auto ps = power_sums(d, 3);
  CHECK(ps[0] == Rational(3));
  CHECK(ps[1] == Rational(5, 2));
  CHECK(ps[2] == Rational(21, 4));
  CHECK(ps[3] == Rational(71, 8));
}

TEST_CASE("higher-order preconditions") {
  const std::vector<Rational> bad{Rational(1), Rational(0)};
  CHECK_THROWS_AS(bernoulli_ho_gf(2, bad), DomainError);
  CHECK_THROWS_AS(bernoulli_ho_gf(2, std::vector<Rational>{}), DomainError);
  const std::vector<Rational> ones(3, Rational(1));
  CHECK_THROWS_AS(bernoulli_ho_from_eulerian(2, ones), DomainError);
  const ParamSet singular = ParamSet::uniform(ones, Rational(1), Rational(0));
  CHECK_THROWS_AS(eulerian_ho_gf(1, singular), SingularParameter);
  const ParamSet mixed{ones, {Rational(1, 2), Rational(1, 3), Rational(1, 2)}, {Rational(1), Rational(1), Rational(1)}};
  CHECK_THROWS_AS(eulerian_ho_bell(2, mixed), UnsupportedParameter);
  CHECK_THROWS_AS(eulerian_ho_recurrence_table(mixed, 2), UnsupportedParameter);
}
