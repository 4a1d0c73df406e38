#include "norlund/framework.hpp"

#include <string>

#include "norlund/bell.hpp"
#include "norlund/binomial.hpp"
#include "norlund/errors.hpp"
#include "norlund/higher_order.hpp"
#include "norlund/series.hpp"

namespace norlund {

namespace {

// P_{n+1} = a P_n + b sum_k C(n,k) diag_k P_{n-k}. An empty diag means the
// family is its own diagonal (s = r).
std::vector<Rational> run_recurrence(const Rational& a, const Rational& b, const Rational& p0,
                                     std::span<const Rational> diag, std::size_t max_n) {
  std::vector<Rational> p;
  p.reserve(max_n + 1);
  p.push_back(p0);
  for (std::size_t n = 0; n < max_n; ++n) {
    const std::span<const Rational> dg = diag.empty() ? std::span<const Rational>(p) : diag;
    Rational sum;
    for (std::size_t k = 0; k <= n; ++k) sum += binomial(n, k) * dg[k] * p[n - k];
    p.push_back(a * p[n] + b * sum);
  }
  return p;
}

void require_s_independent_g0(const FrameworkSpec& spec, const Rational& s) {
  if (spec.g0(s, spec.r) != spec.g0(spec.r, spec.r)) {
    throw UnsupportedParameter("closed-form generating function needs G0(s,r) independent of s (G0(" + s.str() +
                               "," + spec.r.str() + ") != G0(" + spec.r.str() + "," + spec.r.str() +
                               ")); use the recurrence");
  }
}

// G0 Q1(r) e^{Q1(s) t} / (Q1(r) + G0 Q2(r) (1 - e^{Q1(r) t}))
Series<Rational> closed_gf_series(const Rational& q1_s, const Rational& q1_r, const Rational& q2_r,
                                  const Rational& g0, std::size_t max_n) {
  if (q1_r.is_zero()) throw DomainError("closed-form generating function needs Q1(r) != 0");
  const auto numer = series_scale(exp_linear(q1_s, max_n), g0 * q1_r);
  auto one_minus = series_scale(exp_linear(q1_r, max_n), -(g0 * q2_r));
  one_minus[0] += q1_r + g0 * q2_r;
  return series_mul(numer, series_inv(one_minus));
}

}  // namespace

FrameworkSpec FrameworkSpec::eulerian(const EulerianParams& p) {
  p.validate();
  return FrameworkSpec{UniPoly{Rational(-1), Rational(1)}, UniPoly::constant(-p.cumulant_factor()),
                       constant_g0(p.leading_coefficient()), Rational(0)};
}

BivariateFn FrameworkSpec::constant_g0(const Rational& value) {
  return [value](const Rational&, const Rational&) { return value; };
}

FrameworkFamily family_from_closed_gf(const FrameworkSpec& spec, const Rational& s, std::size_t max_n) {
  require_s_independent_g0(spec, s);
  if (spec.is_degenerate()) {
    const UniPoly q2 = spec.q2;
    const BivariateFn q2_sr = [q2](const Rational&, const Rational& r) { return q2.eval(r); };
    return degenerate_family(q2_sr, spec.g0(s, spec.r), s, spec.r, max_n);
  }
  const auto g = closed_gf_series(spec.q1.eval(s), spec.q1.eval(spec.r), spec.q2.eval(spec.r), spec.g0(s, spec.r),
                                  max_n);
  return FrameworkFamily{s, spec.r, g.egf_coefficients()};
}

FrameworkFamily family_diagonal_closed_gf(const FrameworkSpec& spec, const Rational& s, std::size_t max_n) {
  const Rational q1 = spec.q1.eval(s);
  if (q1.is_zero()) throw DomainError("r = s closed form needs Q1(s) != 0");
  const auto g = closed_gf_series(q1, q1, spec.q2.eval(s), spec.g0(s, s), max_n);
  return FrameworkFamily{s, s, g.egf_coefficients()};
}

FrameworkFamily family_from_recurrence(const FrameworkSpec& spec, const Rational& s, std::size_t max_n) {
  const Rational q2 = spec.q2.eval(spec.r);
  const auto diag = run_recurrence(spec.q1.eval(spec.r), q2, spec.g0(spec.r, spec.r), {}, max_n);
  return FrameworkFamily{s, spec.r, run_recurrence(spec.q1.eval(s), q2, spec.g0(s, spec.r), diag, max_n)};
}

FrameworkFamily family_from_bell(const FrameworkSpec& spec, const Rational& s, std::size_t max_n) {
  const Rational q2 = spec.q2.eval(spec.r);
  const auto diag = spec.is_degenerate() ? family_from_recurrence(spec, spec.r, max_n).values
                                         : family_from_closed_gf(spec, spec.r, max_n).values;
  std::vector<Rational> args(max_n);
  for (std::size_t i = 1; i <= max_n; ++i) args[i - 1] = q2 * diag[i - 1];
  if (max_n >= 1) args[0] += spec.q1.eval(s);
  auto values = complete_bell_table<Rational>(max_n, args);
  const Rational g0 = spec.g0(s, spec.r);
  for (auto& v : values) v *= g0;
  return FrameworkFamily{s, spec.r, std::move(values)};
}

bool satisfies_gf_ode(const Rational& q1_s, const Rational& q2, std::span<const Rational> values,
                      std::span<const Rational> diagonal) {
  if (values.empty() || diagonal.size() < values.size()) return false;
  const std::size_t order = values.size() - 1;
  const auto g = Series<Rational>::from_egf(order, values);
  const auto gd = Series<Rational>::from_egf(order, diagonal.first(values.size()));
  const auto lhs = series_derivative(g);
  if (order == 0) return true;
  const auto rhs = series_truncate(series_add(series_scale(g, q1_s), series_scale(series_mul(gd, g), q2)), order - 1);
  return lhs == rhs;
}

bool verify_gf_ode(const FrameworkSpec& spec, const Rational& s, std::size_t max_n) {
  const auto family = family_from_closed_gf(spec, s, max_n);
  const auto diagonal = family_from_closed_gf(spec, spec.r, max_n);
  return verify_gf_ode(spec, family, diagonal);
}

bool verify_gf_ode(const FrameworkSpec& spec, const FrameworkFamily& family, const FrameworkFamily& diagonal) {
  return satisfies_gf_ode(spec.q1.eval(family.s), spec.q2.eval(spec.r), family.values, diagonal.values);
}

// ---- higher order ------------------------------------------------------------

FrameworkFamily family_ho_from_gf(const FrameworkSpec& spec, const Rational& s, std::span<const Rational> d,
                                  std::size_t max_n) {
  validate_weights(d);
  if (spec.is_degenerate()) throw UnsupportedParameter("higher-order generating function needs Q1 != 0");
  require_s_independent_g0(spec, s);
  const Rational q1_s = spec.q1.eval(s);
  const Rational q1_0 = spec.q1.eval(Rational(0));
  const Rational q1_r = spec.q1.eval(spec.r);
  const Rational q2_r = spec.q2.eval(spec.r);
  const Rational g0 = spec.g0(s, spec.r);
  if (q1_r.is_zero()) throw DomainError("higher-order generating function needs Q1(r) != 0");
  if (g0.is_zero()) throw DomainError("higher-order generating function needs G0 != 0");

  auto g = exp_linear(q1_s - q1_0, max_n);
  const Rational ratio = q2_r / q1_r;
  for (const auto& di : d) {
    // G0^{-1} + (Q2/Q1(r)) (1 - e^{Q1(r) d_i t})
    auto denom = series_scale(exp_linear(q1_r * di, max_n), -ratio);
    denom[0] += g0.inverse() + ratio;
    g = series_mul(g, series_mul(exp_linear(q1_0 * di, max_n), series_inv(denom)));
  }
  return FrameworkFamily{s, spec.r, g.egf_coefficients()};
}

FrameworkFamily family_ho_recurrence(const FrameworkSpec& spec, const Rational& s, std::span<const Rational> d,
                                     std::size_t max_n) {
  validate_weights(d);
  const auto ps = power_sums(d, max_n + 1);
  const Rational q2 = spec.q2.eval(spec.r);
  const auto diag = family_from_recurrence(spec, spec.r, max_n).values;
  const Rational a = spec.q1.eval(s) - spec.q1.eval(Rational(0)) * (Rational(1) - ps[1]);

  std::vector<Rational> p;
  p.reserve(max_n + 1);
  p.push_back(spec.g0(s, spec.r).pow(static_cast<long>(d.size())));
  for (std::size_t n = 0; n < max_n; ++n) {
    Rational sum;
    for (std::size_t k = 0; k <= n; ++k) sum += binomial(n, k) * diag[k] * ps[k + 1] * p[n - k];
    p.push_back(a * p[n] + q2 * sum);
  }
  return FrameworkFamily{s, spec.r, std::move(p)};
}

bool verify_gf_ode_ho(const FrameworkSpec& spec, std::span<const Rational> d, const FrameworkFamily& family,
                      const FrameworkFamily& diagonal) {
  if (family.values.empty() || diagonal.values.size() < family.values.size()) return false;
  const std::size_t order = family.values.size() - 1;
  if (order == 0) return true;
  const auto ps = power_sums(d, order + 1);
  std::vector<Rational> weighted(order + 1);
  for (std::size_t k = 0; k <= order; ++k) weighted[k] = diagonal.values[k] * ps[k + 1];

  const auto g = Series<Rational>::from_egf(order, family.values);
  const auto kernel = Series<Rational>::from_egf(order, weighted);
  const Rational a = spec.q1.eval(family.s) - spec.q1.eval(Rational(0)) * (Rational(1) - ps[1]);
  const auto rhs = series_add(series_scale(g, a), series_scale(series_mul(kernel, g), spec.q2.eval(spec.r)));
  return series_derivative(g) == series_truncate(rhs, order - 1);
}

// ---- degenerate branch ---------------------------------------------------------

std::optional<Rational> degenerate_diagonal_seed(const BivariateFn& q2, const Rational& g0, const Rational& s,
                                                 const Rational& r) {
  const Rational q2_rr = q2(r, r);
  const Rational q2_sr = q2(s, r);
  if (q2_rr.is_zero() || q2_sr.is_zero()) throw DomainError("degenerate closed form needs Q2(r,r) != 0 and Q2(s,r) != 0");
  return rational_power(g0, q2_rr / q2_sr);
}

FrameworkFamily degenerate_family(const BivariateFn& q2, const Rational& g0, const Rational& s, const Rational& r,
                                  std::size_t max_n) {
  const auto inner = degenerate_diagonal_seed(q2, g0, s, r);
  if (!inner) {
    throw UnsupportedParameter("G0^(Q2(r,r)/Q2(s,r)) = " + g0.str() + "^(" + (q2(r, r) / q2(s, r)).str() +
                               ") is irrational; use the recurrence");
  }
  const Rational q2_rr = q2(r, r);
  Series<Rational> base(max_n, {Rational(1), -(q2_rr * *inner)});
  const auto g = series_scale(series_pow(base, -(q2(s, r) / q2_rr)), g0);
  return FrameworkFamily{s, r, g.egf_coefficients()};
}

FrameworkFamily degenerate_recurrence(const BivariateFn& q2, const Rational& g0_sr, const Rational& g0_rr,
                                      const Rational& s, const Rational& r, std::size_t max_n) {
  const auto diag = run_recurrence(Rational(0), q2(r, r), g0_rr, {}, max_n);
  return FrameworkFamily{s, r, run_recurrence(Rational(0), q2(s, r), g0_sr, diag, max_n)};
}

FrameworkFamily degenerate_diagonal_family(const Rational& q2, const Rational& g0, const Rational& s,
                                           std::size_t max_n) {
  Series<Rational> denom(max_n, {Rational(1), -(g0 * q2)});
  const auto g = series_scale(series_inv(denom), g0);
  return FrameworkFamily{s, s, g.egf_coefficients()};
}

}  // namespace norlund
