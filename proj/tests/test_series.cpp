#include "doctest.h"

#include "norlund/errors.hpp"
#include "norlund/kernels.hpp"
#include "norlund/series.hpp"
#include "oracles.hpp"

using namespace norlund;

namespace {

Series<Rational> random_series(oracle::Gen& g, std::size_t order, const Rational& constant) {
  Series<Rational> f(order, g.vec(order + 1, 5));
  f[0] = constant;
  return f;
}

}  // namespace

TEST_CASE("series product matches plain convolution") {
  oracle::Gen g(1);
  for (std::size_t order : {0u, 1u, 7u, 40u, 80u}) {
    const Series<Rational> a(order, g.vec(order + 1)), b(order, g.vec(order + 1));
    CHECK(series_mul(a, b).coeffs() == oracle::mul(a.coeffs(), b.coeffs()));
  }
}

TEST_CASE("serial and parallel convolution agree") {
  oracle::Gen g(2);
  for (std::size_t n : {1u, 10u, 64u, 200u}) {
    const auto a = g.vec(n), b = g.vec(n + 3);
    for (std::size_t limit : {n, n / 2 + 1, 2 * n + 3}) {
      const auto serial = kernels::serial::convolve<Rational>(a, b, limit);
      CHECK(serial == kernels::parallel::convolve<Rational>(a, b, limit));
      CHECK(serial.size() == std::min(limit, a.size() + b.size() - 1));
    }
  }
}

TEST_CASE("inverse, exp and log") {
  oracle::Gen g(3);
  for (std::size_t order : {0u, 1u, 5u, 16u, 32u}) {
    const auto f = random_series(g, order, g.nonzero());
    CHECK(series_mul(f, series_inv(f)) == Series<Rational>::one(order));

    const auto h = random_series(g, order, Rational(0));
    CHECK(series_log(series_exp(h)) == h);
    const auto u = random_series(g, order, Rational(1));
    CHECK(series_exp(series_log(u)) == u);
  }
}

TEST_CASE("log of a product and power additivity") {
  oracle::Gen g(4);
  for (int i = 0; i < 10; ++i) {
    const auto f = random_series(g, 12, Rational(1));
    const auto h = random_series(g, 12, Rational(1));
    CHECK(series_log(series_mul(f, h)) == series_add(series_log(f), series_log(h)));
    const auto a = g.rational(), b = g.rational();
    CHECK(series_mul(series_pow(f, a), series_pow(f, b)) == series_pow(f, a + b));
    CHECK(series_pow(f, Rational(3)) == series_mul(f, series_mul(f, f)));
  }
}

TEST_CASE("exp of a linear term") {
  const auto e = exp_linear(Rational(2), 6);
  CHECK(e.coeffs() == oracle::exp_series(Rational(2), 6));
  CHECK(series_exp(Series<Rational>(6, {Rational(0), Rational(2)})) == e);
  CHECK(evaluate_at(exp_st(6), Rational(2)) == e);
  CHECK(exp_st(Rational(2), 6) == e);
}

TEST_CASE("series preconditions") {
  CHECK_THROWS_AS(series_inv(Series<Rational>(3)), DomainError);
  CHECK_THROWS_AS(series_exp(Series<Rational>::one(3)), DomainError);
  CHECK_THROWS_AS(series_log(Series<Rational>(3)), DomainError);
  CHECK_THROWS_AS(series_mul(Series<Rational>(3), Series<Rational>(4)), std::invalid_argument);
  CHECK_THROWS_AS(series_truncate(Series<Rational>(3), 5), std::invalid_argument);
}

TEST_CASE("derivative and egf coefficients") {
  const auto e = exp_linear(Rational(1), 5);
  CHECK(series_derivative(e) == series_truncate(e, 4));
  for (const auto& c : e.egf_coefficients()) CHECK(c == Rational(1));
  CHECK(Series<Rational>::from_egf(5, e.egf_coefficients()) == e);
}
