#include "norlund/higher_order.hpp"

#include <string>

#include "norlund/binomial.hpp"
#include "norlund/errors.hpp"

namespace norlund {

ParamSet ParamSet::uniform(std::vector<Rational> d, const Rational& rho, const Rational& alpha) {
  const std::size_t m = d.size();
  return ParamSet{std::move(d), std::vector<Rational>(m, rho), std::vector<Rational>(m, alpha)};
}

void ParamSet::validate() const {
  if (rho.size() != d.size() || alpha.size() != d.size()) {
    throw DomainError("parameter vectors d, rho, alpha must have equal length (got " + std::to_string(d.size()) +
                      ", " + std::to_string(rho.size()) + ", " + std::to_string(alpha.size()) + ")");
  }
  validate_weights(d);
  for (std::size_t i = 0; i < m(); ++i) EulerianParams{rho[i], alpha[i]}.validate();
}

bool ParamSet::is_uniform() const {
  for (std::size_t i = 1; i < m(); ++i) {
    if (rho[i] != rho[0] || alpha[i] != alpha[0]) return false;
  }
  return true;
}

Rational ParamSet::leading_coefficient() const {
  validate();
  Rational c(1);
  for (std::size_t i = 0; i < m(); ++i) c *= EulerianParams{rho[i], alpha[i]}.leading_coefficient();
  return c;
}

PowerSums power_sums(std::span<const Rational> d, std::size_t max_k) {
  PowerSums ps{std::vector<Rational>(max_k + 1)};
  for (const auto& di : d) {
    Rational pw(1);
    for (std::size_t k = 0; k <= max_k; ++k) {
      ps.sigma[k] += pw;
      pw *= di;
    }
  }
  return ps;
}

void validate_weights(std::span<const Rational> d) {
  if (d.empty()) throw DomainError("weight vector d must be nonempty (order m >= 1)");
  for (const auto& di : d) {
    if (di.is_zero()) throw DomainError("weights d_i must be nonzero");
  }
}

// ---- Bernoulli ------------------------------------------------------------

Series<Rational> bernoulli_ho_kernel(std::span<const Rational> d, std::size_t order) {
  validate_weights(d);
  const auto unit = bernoulli_gf(order);
  auto acc = Series<Rational>::one(order);
  for (const auto& di : d) acc = series_mul(acc, series_scale_t(unit, di));
  return acc;
}

std::vector<UniPoly> bernoulli_ho_gf_table(std::span<const Rational> d, std::size_t max_n) {
  return polys_times_exp_st(bernoulli_ho_kernel(d, max_n));
}

UniPoly bernoulli_ho_gf(std::size_t n, std::span<const Rational> d) { return bernoulli_ho_gf_table(d, n)[n]; }

std::vector<Rational> bernoulli_ho_values(std::span<const Rational> d, const Rational& s, std::size_t max_n) {
  return series_mul(bernoulli_ho_kernel(d, max_n), exp_st(s, max_n)).egf_coefficients();
}

BellArgs<UniPoly> bernoulli_ho_bell_args(std::span<const Rational> d, std::size_t max_n) {
  validate_weights(d);
  const auto bern = bernoulli_numbers(max_n);
  const auto ps = power_sums(d, max_n);
  BellArgs<UniPoly> args(max_n);
  for (std::size_t i = 1; i <= max_n; ++i) {
    const Rational sign = i % 2 == 1 ? Rational(1) : Rational(-1);
    args[i - 1] = UniPoly::constant(sign * bern[i] * ps[i] / Rational(static_cast<long>(i)));
  }
  if (max_n >= 1) args[0] += UniPoly::variable();
  return args;
}

std::vector<UniPoly> bernoulli_ho_bell_table(std::span<const Rational> d, std::size_t max_n) {
  const auto args = bernoulli_ho_bell_args(d, max_n);
  return complete_bell_table<UniPoly>(max_n, args);
}

UniPoly bernoulli_ho_bell(std::size_t n, std::span<const Rational> d) { return bernoulli_ho_bell_table(d, n)[n]; }

std::vector<UniPoly> eulerian_ho_at_rho_one(std::span<const Rational> d, std::size_t max_j) {
  validate_weights(d);
  const std::size_t m = d.size();
  const std::size_t order = max_j + m;
  // e^{d t} - 1 = t * sum_k d^{k+1} t^k / (k+1)!; invert the regular part.
  auto regular = Series<Rational>::one(order);
  for (const auto& di : d) {
    const auto e = exp_linear(di, order + 1);
    std::vector<Rational> shifted(e.coeffs().begin() + 1, e.coeffs().end());
    regular = series_mul(regular, series_inv(Series<Rational>(order, std::move(shifted))));
  }
  // e^{st} prod 1/(e^{d_i t} - 1) = t^{-m} (regular * e^{st}); the t^j
  // coefficient is the t^{j+m} coefficient of the product.
  const auto full = series_mul(lift(regular), exp_st(order));
  std::vector<UniPoly> out(max_j + 1);
  Rational j_fact(1);
  for (std::size_t j = 0; j <= max_j; ++j) {
    if (j > 0) j_fact *= Rational(static_cast<long>(j));
    out[j] = full[j + m] * j_fact;
  }
  return out;
}

UniPoly bernoulli_ho_from_eulerian(std::size_t n, std::span<const Rational> d) {
  validate_weights(d);
  const std::size_t m = d.size();
  if (n < m) {
    throw DomainError("B^(m)_n from H^(m)_{n-m} needs n >= m (n = " + std::to_string(n) +
                      ", m = " + std::to_string(m) + ")");
  }
  Rational pi1(1);
  for (const auto& di : d) pi1 *= di;
  const auto h = eulerian_ho_at_rho_one(d, n - m);
  const Rational scale = factorial(static_cast<unsigned>(n)) * pi1 / factorial(static_cast<unsigned>(n - m));
  return h[n - m] * scale;
}

// ---- Eulerian -------------------------------------------------------------

Series<Rational> eulerian_ho_kernel(const ParamSet& p, std::size_t order) {
  p.validate();
  auto acc = Series<Rational>::one(order);
  for (std::size_t i = 0; i < p.m(); ++i) {
    auto denom = exp_linear(p.d[i], order);
    denom[0] -= p.rho[i];
    acc = series_mul(acc, series_scale(series_inv(denom), Rational(1) - p.alpha[i] * p.rho[i]));
  }
  return acc;
}

std::vector<UniPoly> eulerian_ho_gf_table(const ParamSet& p, std::size_t max_n) {
  return polys_times_exp_st(eulerian_ho_kernel(p, max_n));
}

UniPoly eulerian_ho_gf(std::size_t n, const ParamSet& p) { return eulerian_ho_gf_table(p, n)[n]; }

std::vector<Rational> eulerian_ho_values(const ParamSet& p, const Rational& s, std::size_t max_n) {
  return series_mul(eulerian_ho_kernel(p, max_n), exp_st(s, max_n)).egf_coefficients();
}

std::vector<UniPoly> euler_ho_gf_table(std::span<const Rational> d, std::size_t max_n) {
  validate_weights(d);
  auto acc = Series<Rational>::one(max_n);
  for (const auto& di : d) {
    auto denom = exp_linear(di, max_n);
    denom[0] += Rational(1);
    acc = series_mul(acc, series_scale(series_inv(denom), Rational(2)));
  }
  return polys_times_exp_st(acc);
}

UniPoly euler_ho_gf(std::size_t n, std::span<const Rational> d) { return euler_ho_gf_table(d, n)[n]; }

namespace {

void require_uniform(const ParamSet& p, const char* what) {
  p.validate();
  if (!p.is_uniform()) {
    throw UnsupportedParameter(std::string(what) + " requires all rho_i equal and all alpha_i equal");
  }
}

}  // namespace

std::vector<UniPoly> eulerian_ho_bell_table(const ParamSet& p, std::size_t max_n) {
  require_uniform(p, "the Bell representation of H^(m)_n");
  const EulerianParams scalar{p.rho[0], p.alpha[0]};
  const Rational factor = scalar.cumulant_factor();
  const auto h = eulerian_numbers(max_n, scalar);
  const auto ps = power_sums(p.d, max_n);

  BellArgs<UniPoly> args(max_n);
  for (std::size_t i = 1; i <= max_n; ++i) args[i - 1] = UniPoly::constant(-factor * h[i - 1] * ps[i]);
  if (max_n >= 1) args[0] += UniPoly{-ps[1], Rational(1)};

  auto table = complete_bell_table<UniPoly>(max_n, args);
  const Rational norm = scalar.leading_coefficient().pow(static_cast<long>(p.m()));
  for (auto& poly : table) poly *= norm;
  return table;
}

UniPoly eulerian_ho_bell(std::size_t n, const ParamSet& p) { return eulerian_ho_bell_table(p, n)[n]; }

UniPoly eulerian_ho_recurrence_step(std::size_t n, const ParamSet& p, std::span<const UniPoly> table) {
  require_uniform(p, "the higher-order Eulerian recurrence");
  if (table.size() < n + 1) {
    throw DomainError("recurrence step " + std::to_string(n) + " needs H^(m)_0 .. H^(m)_" + std::to_string(n));
  }
  const EulerianParams scalar{p.rho[0], p.alpha[0]};
  const auto h = eulerian_numbers(n, scalar);
  const auto ps = power_sums(p.d, n + 1);

  UniPoly sum;
  for (std::size_t k = 0; k <= n; ++k) sum += table[n - k] * (binomial(n, k) * h[k] * ps[k + 1]);
  return UniPoly{-ps[1], Rational(1)} * table[n] - sum * scalar.cumulant_factor();
}

std::vector<UniPoly> eulerian_ho_recurrence_table(const ParamSet& p, std::size_t max_n) {
  std::vector<UniPoly> table{UniPoly::constant(p.leading_coefficient())};
  table.reserve(max_n + 1);
  for (std::size_t n = 0; n < max_n; ++n) table.push_back(eulerian_ho_recurrence_step(n, p, table));
  return table;
}

}  // namespace norlund
