#include "norlund/classical.hpp"

#include <algorithm>
#include <mutex>

#include "norlund/errors.hpp"

namespace norlund {

void EulerianParams::validate() const {
  if (rho.is_one()) throw SingularParameter("rho = 1 is singular for the Eulerian generating function");
  if ((alpha * rho).is_one()) throw DegenerateParameter("alpha * rho = 1 is degenerate (1 - alpha rho = 0)");
}

Rational EulerianParams::leading_coefficient() const {
  validate();
  return (Rational(1) - alpha * rho) / (Rational(1) - rho);
}

Rational EulerianParams::cumulant_factor() const {
  validate();
  return rho / (Rational(1) - alpha * rho);
}

std::vector<UniPoly> polys_times_exp_st(const Series<Rational>& kernel) {
  // [t^n] G e^{st} = sum_k g_k s^{n-k} / (n-k)!, so
  // n! [t^n] = sum_k n!/(n-k)! g_k s^{n-k}.
  const std::size_t order = kernel.order();
  std::vector<Rational> inv_fact(order + 1);
  inv_fact[0] = Rational(1);
  for (std::size_t k = 1; k <= order; ++k) inv_fact[k] = inv_fact[k - 1] * Rational(1, static_cast<long>(k));

  std::vector<UniPoly> out(order + 1);
  Rational n_fact(1);
  for (std::size_t n = 0; n <= order; ++n) {
    if (n > 0) n_fact *= Rational(static_cast<long>(n));
    std::vector<Rational> coeffs(n + 1);
    for (std::size_t k = 0; k <= n; ++k) coeffs[n - k] = n_fact * kernel[k] * inv_fact[n - k];
    out[n] = UniPoly(std::move(coeffs));
  }
  return out;
}

Series<Rational> bernoulli_gf(std::size_t order) {
  // (e^t - 1)/t = sum_k t^k / (k+1)!
  std::vector<Rational> c(order + 1);
  Rational inv_fact(1);
  for (std::size_t k = 0; k <= order; ++k) {
    inv_fact *= Rational(1, static_cast<long>(k + 1));
    c[k] = inv_fact;
  }
  return series_inv(Series<Rational>(order, std::move(c)));
}

namespace {

// Write-once cache of B_0 .. B_N; grows by recomputation, never mutates
// published entries.
struct BernoulliCache {
  std::mutex mutex;
  std::vector<Rational> values;
};

BernoulliCache& bernoulli_cache() {
  static BernoulliCache cache;
  return cache;
}

}  // namespace

std::vector<Rational> bernoulli_numbers(std::size_t max_n) {
  auto& cache = bernoulli_cache();
  std::lock_guard lock(cache.mutex);
  if (cache.values.size() <= max_n) {
    const std::size_t order = std::max<std::size_t>(max_n, 2 * cache.values.size());
    cache.values = bernoulli_gf(order).egf_coefficients();
  }
  return {cache.values.begin(), cache.values.begin() + static_cast<std::ptrdiff_t>(max_n) + 1};
}

Rational bernoulli_number(std::size_t n) { return bernoulli_numbers(n)[n]; }

std::vector<UniPoly> bernoulli_poly_table(std::size_t max_n) {
  return polys_times_exp_st(bernoulli_gf(max_n));
}

UniPoly bernoulli_poly(std::size_t n) { return bernoulli_poly_table(n)[n]; }

Series<Rational> euler_gf(std::size_t order) {
  auto denom = exp_linear(Rational(1), order);
  denom[0] += Rational(1);
  return series_scale(series_inv(denom), Rational(2));
}

std::vector<UniPoly> euler_poly_table(std::size_t max_n) { return polys_times_exp_st(euler_gf(max_n)); }

UniPoly euler_poly(std::size_t n) { return euler_poly_table(n)[n]; }

std::vector<UniPoly> eulerian_poly_table(std::size_t max_n, const Rational& rho) {
  if (rho.is_one()) throw SingularParameter("rho = 1 is singular for the Eulerian generating function");
  auto denom = exp_linear(Rational(1), max_n);
  denom[0] -= rho;
  return polys_times_exp_st(series_scale(series_inv(denom), Rational(1) - rho));
}

UniPoly eulerian_poly(std::size_t n, const Rational& rho) { return eulerian_poly_table(n, rho)[n]; }

Series<Rational> eulerian_gen_gf(const EulerianParams& p, std::size_t order) {
  p.validate();
  auto denom = exp_linear(Rational(1), order);
  denom[0] -= p.rho;
  return series_scale(series_inv(denom), Rational(1) - p.alpha * p.rho);
}

std::vector<UniPoly> eulerian_gen_poly_table(std::size_t max_n, const EulerianParams& p) {
  return polys_times_exp_st(eulerian_gen_gf(p, max_n));
}

UniPoly eulerian_gen_poly(std::size_t n, const EulerianParams& p) { return eulerian_gen_poly_table(n, p)[n]; }

std::vector<Rational> eulerian_numbers(std::size_t max_n, const EulerianParams& p) {
  // Setting s = 0 drops the e^{st} factor.
  return eulerian_gen_gf(p, max_n).egf_coefficients();
}

Rational eulerian_number(std::size_t n, const EulerianParams& p) { return eulerian_numbers(n, p)[n]; }

}  // namespace norlund
