#include "norlund/identities.hpp"

#include <algorithm>
#include <stdexcept>

#include "norlund/bell.hpp"
#include "norlund/binomial.hpp"
#include "norlund/classical.hpp"
#include "norlund/framework.hpp"
#include "norlund/higher_order.hpp"
#include "norlund/series.hpp"

namespace norlund {

Grid GridOverride::apply(Grid g) const {
  if (n_max) g.n_max = *n_max;
  if (m_max) g.m_max = *m_max;
  if (weight_vectors) g.weight_vectors = *weight_vectors;
  return g;
}

const char* to_string(CheckMode mode) { return mode == CheckMode::symbolic ? "symbolic" : "sampled"; }

namespace {

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string str(std::size_t v) { return std::to_string(v); }

std::string str(std::span<const Rational> v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ",";
    out += v[i].str();
  }
  return out + "]";
}

std::vector<Rational> appended(std::span<const Rational> d, const Rational& extra) {
  std::vector<Rational> out(d.begin(), d.end());
  out.push_back(extra);
  return out;
}

Rational rat(std::size_t v) { return Rational(static_cast<long>(v)); }

const UniPoly& s_poly() {
  static const UniPoly s = UniPoly::variable();
  return s;
}

UniPoly s_minus(const Rational& c) { return UniPoly{-c, Rational(1)}; }

// Calls body(m, d) for every random weight vector of every order m = 1 .. m_max.
template <class F>
void for_each_weights(CheckContext& ctx, F&& body) {
  for (std::size_t m = 1; m <= ctx.grid().m_max; ++m) {
    for (const auto& d : ctx.weight_vectors(m)) body(m, d);
  }
}

// ---- Bernoulli numbers and polynomials ------------------------------------

void check_bernoulli_numbers_alt(CheckContext& ctx) {
  const std::size_t N = ctx.grid().n_max;
  const auto b = bernoulli_numbers(N);
  for (std::size_t n = 1; n <= N; ++n) {
    Rational lhs;
    for (std::size_t k = 1; k <= n; ++k) {
      const Rational term = binomial(n, k) * b[k] * b[n - k];
      lhs += k % 2 == 0 ? term : -term;
    }
    ctx.expect({{"n", str(n)}}, lhs, -rat(n) * b[n]);
  }
}

void check_euler_identity(CheckContext& ctx) {
  const std::size_t N = ctx.grid().n_max;
  const auto b = bernoulli_numbers(N);
  for (std::size_t n = 1; n <= N; ++n) {
    Rational sum;
    for (std::size_t k = 1; k <= n; ++k) sum += binomial(n, k) * b[k] * b[n - k];
    ctx.expect({{"n", str(n)}}, b[n], -b[n - 1] - sum / rat(n));
  }
}

void check_euler_identity_sign_flipped(CheckContext& ctx) {
  const std::size_t N = ctx.grid().n_max;
  const auto b = bernoulli_numbers(N);
  for (std::size_t n = 1; n <= N; ++n) {
    Rational sum;
    for (std::size_t k = 1; k <= n; ++k) sum += binomial(n, k) * b[k] * b[n - k];
    ctx.expect({{"n", str(n)}}, b[n], b[n - 1] - sum / rat(n));
  }
}

void check_bernoulli_poly_rec(CheckContext& ctx) {
  const std::size_t N = ctx.grid().n_max;
  const auto b = bernoulli_numbers(N);
  const auto p = bernoulli_poly_table(N);
  for (std::size_t n = 1; n <= N; ++n) {
    UniPoly sum;
    for (std::size_t k = 1; k <= n; ++k) {
      const Rational c = binomial(n, k) * b[k];
      sum += p[n - k] * (k % 2 == 0 ? c : -c);
    }
    ctx.expect({{"n", str(n)}}, p[n], s_poly() * p[n - 1] - sum / rat(n));
  }
}

void check_bernoulli_poly_rec_alt(CheckContext& ctx) {
  const std::size_t N = ctx.grid().n_max;
  const auto b = bernoulli_numbers(N);
  const auto p = bernoulli_poly_table(N);
  for (std::size_t n = 1; n <= N; ++n) {
    UniPoly sum;
    for (std::size_t k = 1; k <= n; ++k) sum += p[n - k] * (binomial(n, k) * b[k]);
    ctx.expect({{"n", str(n)}}, p[n], s_minus(Rational(1)) * p[n - 1] - sum / rat(n));
  }
}

void check_bernoulli_poly_sum(CheckContext& ctx) {
  const std::size_t N = ctx.grid().n_max;
  const auto p = bernoulli_poly_table(N);
  for (const auto& s : ctx.grid().s_samples) {
    for (const auto& t : ctx.grid().s_samples) {
      const Rational u = s + t;
      for (std::size_t n = 1; n <= N; ++n) {
        Rational lhs;
        for (std::size_t k = 0; k <= n; ++k) lhs += binomial(n, k) * p[k](s) * p[n - k](t);
        const Rational rhs = rat(n) * (u - Rational(1)) * p[n - 1](u) - (rat(n) - Rational(1)) * p[n](u);
        ctx.expect({{"n", str(n)}, {"s", s.str()}, {"t", t.str()}}, lhs, rhs);
      }
    }
  }
}

// ---- Bernoulli of higher order ---------------------------------------------

void check_bernoulli_ho_rec(CheckContext& ctx) {
  const std::size_t N = ctx.grid().n_max;
  const auto b = bernoulli_numbers(N);
  for_each_weights(ctx, [&](std::size_t, const std::vector<Rational>& d) {
    const auto p = bernoulli_ho_gf_table(d, N);
    const auto ps = power_sums(d, N);
    for (std::size_t n = 1; n <= N; ++n) {
      UniPoly sum;
      for (std::size_t k = 1; k <= n; ++k) {
        const Rational c = binomial(n, k) * b[k] * ps[k];
        sum += p[n - k] * (k % 2 == 0 ? c : -c);
      }
      ctx.expect({{"n", str(n)}, {"d", str(d)}}, p[n], s_poly() * p[n - 1] - sum / rat(n));
    }
  });
}

void check_bernoulli_ho_rec_alt(CheckContext& ctx) {
  const std::size_t N = ctx.grid().n_max;
  const auto b = bernoulli_numbers(N);
  for_each_weights(ctx, [&](std::size_t, const std::vector<Rational>& d) {
    const auto p = bernoulli_ho_gf_table(d, N);
    const auto ps = power_sums(d, N);
    for (std::size_t n = 1; n <= N; ++n) {
      UniPoly sum;
      for (std::size_t k = 1; k <= n; ++k) sum += p[n - k] * (binomial(n, k) * b[k] * ps[k]);
      ctx.expect({{"n", str(n)}, {"d", str(d)}}, p[n], s_minus(ps[1]) * p[n - 1] - sum / rat(n));
    }
  });
}

void check_odd_bernoulli_cancel(CheckContext& ctx) {
  const std::size_t N = ctx.grid().n_max;
  const auto b = bernoulli_numbers(N);
  for_each_weights(ctx, [&](std::size_t, const std::vector<Rational>& d) {
    const auto p = bernoulli_ho_gf_table(d, N);
    const auto ps = power_sums(d, N);
    for (std::size_t n = 1; n <= N; ++n) {
      UniPoly lhs;
      for (std::size_t k = 1; k <= n; ++k) {
        const Rational one_minus_sign = k % 2 == 0 ? Rational(0) : Rational(2);
        lhs += p[n - k] * (binomial(n, k) * one_minus_sign * b[k] * ps[k]);
      }
      ctx.expect({{"n", str(n)}, {"d", str(d)}}, lhs, p[n - 1] * (-rat(n) * ps[1]));
    }
  });
}

// B^(m+1)_0..N(s | d u d_i) for every i.
std::vector<std::vector<UniPoly>> raised_tables(const std::vector<Rational>& d, std::size_t N) {
  std::vector<std::vector<UniPoly>> out;
  out.reserve(d.size());
  for (const auto& di : d) out.push_back(bernoulli_ho_gf_table(appended(d, di), N));
  return out;
}

void check_order_raising_sum(CheckContext& ctx) {
  const std::size_t N = ctx.grid().n_max;
  for_each_weights(ctx, [&](std::size_t m, const std::vector<Rational>& d) {
    const auto p = bernoulli_ho_gf_table(d, N);
    const auto raised = raised_tables(d, N);
    const Rational sigma1 = power_sums(d, 1)[1];
    for (std::size_t n = 1; n <= N; ++n) {
      UniPoly lhs;
      for (const auto& table : raised) lhs += table[n];
      const UniPoly rhs = s_minus(sigma1) * p[n - 1] * rat(n) - p[n] * (rat(n) - rat(m));
      ctx.expect({{"n", str(n)}, {"d", str(d)}}, lhs, rhs);
    }
  });
}

void check_order_raising_diag(CheckContext& ctx) {
  for_each_weights(ctx, [&](std::size_t m, const std::vector<Rational>& d) {
    const auto p = bernoulli_ho_gf_table(d, m);
    const auto raised = raised_tables(d, m);
    const Rational sigma1 = power_sums(d, 1)[1];
    UniPoly lhs;
    for (const auto& table : raised) lhs += table[m];
    ctx.expect({{"m", str(m)}, {"d", str(d)}}, lhs, s_minus(sigma1) * p[m - 1] * rat(m));
  });
}

// Nörlund's difference relation, in homogeneous form:
//   B^(m+1)_n(s + d_i | d u d_i) - B^(m+1)_n(s | d u d_i) = n d_i B^(m)_{n-1}(s | d).
void check_norlund_shift(CheckContext& ctx) {
  const std::size_t N = ctx.grid().n_max;
  for_each_weights(ctx, [&](std::size_t, const std::vector<Rational>& d) {
    const auto p = bernoulli_ho_gf_table(d, N);
    const auto raised = raised_tables(d, N);
    for (std::size_t i = 0; i < d.size(); ++i) {
      for (std::size_t n = 1; n <= N; ++n) {
        const UniPoly lhs = raised[i][n].shifted(d[i]) - raised[i][n];
        ctx.expect({{"n", str(n)}, {"d", str(d)}, {"i", str(i + 1)}}, lhs, p[n - 1] * (rat(n) * d[i]));
      }
    }
  });
}

void check_order_raising_shifted(CheckContext& ctx) {
  const std::size_t N = ctx.grid().n_max;
  for_each_weights(ctx, [&](std::size_t m, const std::vector<Rational>& d) {
    const auto p = bernoulli_ho_gf_table(d, N);
    const auto raised = raised_tables(d, N);
    for (std::size_t n = 1; n <= N; ++n) {
      UniPoly lhs;
      for (std::size_t i = 0; i < d.size(); ++i) lhs += raised[i][n].shifted(d[i]);
      const UniPoly rhs = s_poly() * p[n - 1] * rat(n) - p[n] * (rat(n) - rat(m));
      ctx.expect({{"n", str(n)}, {"d", str(d)}}, lhs, rhs);
    }
  });
}

// m B^(m+1)_n(s | lambda 1) = (m - n) B^(m)_n + n (s - lambda m) B^(m)_{n-1}
void norlund_lambda_cases(CheckContext& ctx, const Rational& lambda) {
  const std::size_t N = ctx.grid().n_max;
  const std::size_t M = ctx.grid().m_max;
  std::vector<std::vector<UniPoly>> tables;  // tables[m-1] = B^(m)(s | lambda 1_m)
  for (std::size_t m = 1; m <= M + 1; ++m) tables.push_back(bernoulli_ho_gf_table(std::vector<Rational>(m, lambda), N));
  for (std::size_t m = 1; m <= M; ++m) {
    const auto& low = tables[m - 1];
    const auto& high = tables[m];
    for (std::size_t n = 1; n <= N; ++n) {
      const UniPoly rhs = low[n] * (rat(m) - rat(n)) + s_minus(lambda * rat(m)) * low[n - 1] * rat(n);
      ctx.expect({{"n", str(n)}, {"m", str(m)}, {"lambda", lambda.str()}}, high[n] * rat(m), rhs);
    }
  }
}

void check_norlund_ones(CheckContext& ctx) { norlund_lambda_cases(ctx, Rational(1)); }

void check_norlund_lambda(CheckContext& ctx) {
  for (const auto& lambda : ctx.grid().lambda) {
    if (!lambda.is_zero()) norlund_lambda_cases(ctx, lambda);
  }
}

void check_norlund_product(CheckContext& ctx) {
  for (const auto& lambda : ctx.grid().lambda) {
    if (lambda.is_zero()) continue;
    for (std::size_t m = 1; m <= ctx.grid().m_max; ++m) {
      std::vector<Rational> roots;
      for (std::size_t i = 1; i <= m; ++i) roots.push_back(lambda * rat(i));
      const UniPoly product = UniPoly::from_roots(roots);
      const auto high = bernoulli_ho_gf_table(std::vector<Rational>(m + 1, lambda), m);
      const auto low = bernoulli_ho_gf_table(std::vector<Rational>(m, lambda), m - 1);
      const GridPoint point{{"m", str(m)}, {"lambda", lambda.str()}};
      ctx.expect(point, high[m], product);
      ctx.expect(point, s_minus(lambda * rat(m)) * low[m - 1], product);
    }
  }
}

// ---- Eulerian ----------------------------------------------------------------

void check_eulerian_gen_rec(CheckContext& ctx) {
  const std::size_t N = ctx.grid().n_max;
  for (const auto& [rho, alpha] : ctx.rho_alpha_pairs()) {
    const EulerianParams p{rho, alpha};
    const auto h = eulerian_gen_poly_table(N, p);
    const auto h0 = eulerian_numbers(N, p);
    const Rational c = p.cumulant_factor();
    for (std::size_t n = 0; n + 1 <= N; ++n) {
      UniPoly sum;
      for (std::size_t k = 0; k <= n; ++k) sum += h[n - k] * (binomial(n, k) * h0[k]);
      ctx.expect({{"n", str(n + 1)}, {"rho", rho.str()}, {"alpha", alpha.str()}}, h[n + 1],
                 s_minus(Rational(1)) * h[n] - sum * c);
    }
  }
}

void check_eulerian_ho_rec(CheckContext& ctx) {
  const std::size_t N = ctx.grid().n_max;
  const auto pairs = ctx.rho_alpha_pairs();
  for_each_weights(ctx, [&](std::size_t, const std::vector<Rational>& d) {
    for (const auto& [rho, alpha] : pairs) {
      const auto p = ParamSet::uniform(d, rho, alpha);
      const auto h = eulerian_ho_gf_table(p, N);
      for (std::size_t n = 0; n + 1 <= N; ++n) {
        ctx.expect({{"n", str(n + 1)}, {"d", str(d)}, {"rho", rho.str()}, {"alpha", alpha.str()}}, h[n + 1],
                   eulerian_ho_recurrence_step(n, p, h));
      }
    }
  });
}

// log(G / G(0)) compared coefficient by coefficient with the expected series.
void expect_series(CheckContext& ctx, GridPoint point, const Series<Rational>& lhs, const Series<Rational>& rhs) {
  point.emplace_back("i", "");
  for (std::size_t i = 0; i <= lhs.order(); ++i) {
    point.back().second = str(i);
    ctx.expect(point, lhs[i], rhs[i]);
  }
}

void check_eulerian_log_gf(CheckContext& ctx) {
  const std::size_t N = ctx.grid().n_max;
  const auto pairs = ctx.rho_alpha_pairs();
  for_each_weights(ctx, [&](std::size_t, const std::vector<Rational>& d) {
    const auto ps = power_sums(d, N);
    for (const auto& [rho, alpha] : pairs) {
      const EulerianParams scalar{rho, alpha};
      const auto p = ParamSet::uniform(d, rho, alpha);
      const auto h0 = eulerian_numbers(N, scalar);
      const Rational c = scalar.cumulant_factor();
      for (const auto& s : ctx.grid().s_samples) {
        auto values = eulerian_ho_values(p, s, N);
        const Rational norm = values[0];
        for (auto& v : values) v /= norm;
        const auto lhs = series_log(Series<Rational>::from_egf(N, values));

        std::vector<Rational> expected(N + 1);
        for (std::size_t i = 1; i <= N; ++i) expected[i] = -c * h0[i - 1] * ps[i];
        if (N >= 1) expected[1] += s - ps[1];
        expect_series(ctx, {{"d", str(d)}, {"rho", rho.str()}, {"alpha", alpha.str()}, {"s", s.str()}}, lhs,
                      Series<Rational>::from_egf(N, expected));
      }
    }
  });
}

void check_bernoulli_log_gf(CheckContext& ctx) {
  const std::size_t N = ctx.grid().n_max;
  const auto b = bernoulli_numbers(N);
  for_each_weights(ctx, [&](std::size_t, const std::vector<Rational>& d) {
    const auto ps = power_sums(d, N);
    for (const auto& s : ctx.grid().s_samples) {
      const auto lhs = series_log(Series<Rational>::from_egf(N, bernoulli_ho_values(d, s, N)));
      std::vector<Rational> expected(N + 1);
      for (std::size_t i = 1; i <= N; ++i) {
        const Rational term = b[i] * ps[i] / rat(i);
        expected[i] = i % 2 == 1 ? term : -term;
      }
      if (N >= 1) expected[1] += s;
      expect_series(ctx, {{"d", str(d)}, {"s", s.str()}}, lhs, Series<Rational>::from_egf(N, expected));
    }
  });
}

// ---- Bell representations ---------------------------------------------------------

void check_bell_bernoulli(CheckContext& ctx) {
  const std::size_t N = ctx.grid().n_max;
  const auto expect_tables = [&](const std::vector<Rational>& d, const std::vector<UniPoly>& gf) {
    const auto bell = bernoulli_ho_bell_table(d, N);
    for (std::size_t n = 0; n <= N; ++n) ctx.expect({{"n", str(n)}, {"d", str(d)}}, bell[n], gf[n]);
  };
  expect_tables({Rational(1)}, bernoulli_poly_table(N));
  for_each_weights(ctx, [&](std::size_t, const std::vector<Rational>& d) { expect_tables(d, bernoulli_ho_gf_table(d, N)); });
}

void bell_eulerian_cases(CheckContext& ctx, bool alpha_one_only) {
  const std::size_t N = ctx.grid().n_max;
  const auto pairs = ctx.rho_alpha_pairs();
  for_each_weights(ctx, [&](std::size_t, const std::vector<Rational>& d) {
    for (const auto& [rho, alpha] : pairs) {
      if (alpha_one_only && !alpha.is_one()) continue;
      const auto p = ParamSet::uniform(d, rho, alpha);
      const auto gf = eulerian_ho_gf_table(p, N);
      const auto bell = eulerian_ho_bell_table(p, N);
      for (std::size_t n = 0; n <= N; ++n) {
        ctx.expect({{"n", str(n)}, {"d", str(d)}, {"rho", rho.str()}, {"alpha", alpha.str()}}, bell[n], gf[n]);
      }
    }
  });
}

void check_bell_eulerian(CheckContext& ctx) { bell_eulerian_cases(ctx, true); }
void check_bell_eulerian_gen(CheckContext& ctx) { bell_eulerian_cases(ctx, false); }

void check_reductions(CheckContext& ctx) {
  const std::size_t N = ctx.grid().n_max;
  const auto compare = [&](const std::string& which, const GridPoint& extra, const std::vector<UniPoly>& a,
                           const std::vector<UniPoly>& b, std::size_t from) {
    for (std::size_t n = from; n < a.size() && n < b.size(); ++n) {
      GridPoint point{{"relation", which}, {"n", str(n)}};
      point.insert(point.end(), extra.begin(), extra.end());
      ctx.expect(point, a[n], b[n]);
    }
  };

  compare("E_n(s) = H_n(s,-1,1)", {}, euler_poly_table(N), eulerian_gen_poly_table(N, {Rational(-1), Rational(1)}), 0);
  for (const auto& rho : ctx.grid().rho) {
    if (rho.is_one()) continue;
    compare("H_n(s,rho) = H_n(s,rho,1)", {{"rho", rho.str()}}, eulerian_poly_table(N, rho),
            eulerian_gen_poly_table(N, {rho, Rational(1)}), 0);
  }
  for (const auto& [rho, alpha] : ctx.rho_alpha_pairs()) {
    compare("H^(1)_n(s,rho,alpha|1) = H_n(s,rho,alpha)", {{"rho", rho.str()}, {"alpha", alpha.str()}},
            eulerian_ho_gf_table(ParamSet::uniform({Rational(1)}, rho, alpha), N),
            eulerian_gen_poly_table(N, {rho, alpha}), 0);
  }

  // B_n(s) = n H_{n-1}(s, 1, 0)
  const auto bern = bernoulli_poly_table(N);
  if (N >= 1) {
    const auto h = eulerian_ho_at_rho_one(std::vector<Rational>{Rational(1)}, N - 1);
    std::vector<UniPoly> scaled(N + 1);
    for (std::size_t n = 1; n <= N; ++n) scaled[n] = h[n - 1] * rat(n);
    compare("B_n(s) = n H_{n-1}(s,1,0)", {}, bern, scaled, 1);
  }

  for_each_weights(ctx, [&](std::size_t m, const std::vector<Rational>& d) {
    compare("E^(m)_n(s|d) = H^(m)_n(s,-1,1|d)", {{"d", str(d)}}, euler_ho_gf_table(d, N),
            eulerian_ho_gf_table(ParamSet::uniform(d, Rational(-1), Rational(1)), N), 0);
    const auto gf = bernoulli_ho_gf_table(d, N);
    std::vector<UniPoly> via_eulerian(N + 1);
    for (std::size_t n = m; n <= N; ++n) via_eulerian[n] = bernoulli_ho_from_eulerian(n, d);
    compare("B^(m)_n(s|d) = n! pi_1/(n-m)! H^(m)_{n-m}(s,1,0|d)", {{"d", str(d)}}, gf, via_eulerian, m);
  });
}

// ---- General framework -------------------------------------------------------

// Nondegenerate spec with random Q1 (degree <= 2, Q1(r) != 0), constant Q2 != 0,
// constant G0 != 0 and a random r.
FrameworkSpec random_spec(CheckContext& ctx) {
  const auto& pool = ctx.grid().weight_pool;
  for (;;) {
    UniPoly q1{ctx.pick(pool), ctx.pick(pool), ctx.rng()() % 2 == 0 ? Rational(0) : ctx.pick(pool)};
    const UniPoly q2 = UniPoly::constant(ctx.pick(pool));
    const Rational g0 = ctx.pick(pool);
    const Rational r = ctx.pick(ctx.grid().s_samples);
    if (q1.eval(r).is_zero()) continue;  // redraw
    return FrameworkSpec{q1, q2, FrameworkSpec::constant_g0(g0), r};
  }
}

std::string describe(const FrameworkSpec& spec) {
  return "Q1=" + spec.q1.pretty() + "; Q2=" + spec.q2.pretty() + "; G0=" + spec.g0(spec.r, spec.r).str() +
         "; r=" + spec.r.str();
}

void expect_families(CheckContext& ctx, const std::string& what, const std::string& spec,
                     const FrameworkFamily& a, const FrameworkFamily& b) {
  for (std::size_t n = 0; n < a.values.size(); ++n) {
    ctx.expect({{"relation", what}, {"spec", spec}, {"s", a.s.str()}, {"n", str(n)}}, a.values[n], b.values.at(n));
  }
}

void check_framework_recurrence(CheckContext& ctx) {
  const std::size_t N = ctx.grid().n_max;
  std::vector<std::pair<FrameworkSpec, std::optional<EulerianParams>>> specs;
  for (const auto& [rho, alpha] : ctx.rho_alpha_pairs()) {
    const EulerianParams p{rho, alpha};
    specs.emplace_back(FrameworkSpec::eulerian(p), p);
  }
  for (int i = 0; i < 2; ++i) specs.emplace_back(random_spec(ctx), std::nullopt);

  for (const auto& [spec, eulerian] : specs) {
    const std::string name = describe(spec);
    const auto diagonal = family_from_closed_gf(spec, spec.r, N);
    std::optional<std::vector<UniPoly>> h;
    if (eulerian) h = eulerian_gen_poly_table(N, *eulerian);
    for (const auto& s : ctx.grid().s_samples) {
      const auto closed = family_from_closed_gf(spec, s, N);
      expect_families(ctx, "closed GF = recurrence", name, closed, family_from_recurrence(spec, s, N));
      expect_families(ctx, "closed GF = Bell form", name, closed, family_from_bell(spec, s, N));
      ctx.expect({{"relation", "GF ODE"}, {"spec", name}, {"s", s.str()}}, verify_gf_ode(spec, closed, diagonal),
                 "dG/dt = Q1 G + Q2 G(r,r) G");
      if (h) {
        for (std::size_t n = 0; n <= N; ++n) {
          ctx.expect({{"relation", "closed GF = H_n(s,rho,alpha)"}, {"spec", name}, {"s", s.str()}, {"n", str(n)}},
                     closed.values[n], (*h)[n](s));
        }
      }
      if (!spec.q1.eval(s).is_zero()) {
        FrameworkSpec at_s = spec;
        at_s.r = s;
        expect_families(ctx, "r = s closed form", name, family_diagonal_closed_gf(spec, s, N),
                        family_from_closed_gf(at_s, s, N));
      }
    }
  }

  // Q1 == 0 with Q2(s, r) = q (s + r) + c: closed form, when rational, against the recurrence.
  const auto& pool = ctx.grid().weight_pool;
  for (int i = 0; i < 4; ++i) {
    const Rational q = ctx.pick(pool);
    const Rational c = ctx.pick(pool);
    const BivariateFn q2 = [q, c](const Rational& s, const Rational& r) { return q * (s + r) + c; };
    const Rational g0 = ctx.pick(pool);
    const std::string name = "Q1=0; Q2=" + q.str() + "*(s+r)+" + c.str() + "; G0=" + g0.str();
    for (const auto& r : ctx.grid().s_samples) {
      for (const auto& s : ctx.grid().s_samples) {
        if (q2(r, r).is_zero() || q2(s, r).is_zero()) continue;
        const auto seed = degenerate_diagonal_seed(q2, g0, s, r);
        if (!seed) continue;
        const auto closed = degenerate_family(q2, g0, s, r, N);
        const auto rec = degenerate_recurrence(q2, g0, *seed, s, r, N);
        expect_families(ctx, "degenerate closed form = recurrence (r=" + r.str() + ")", name, closed, rec);
      }
    }
  }
}

void check_framework_ho(CheckContext& ctx) {
  const std::size_t N = ctx.grid().n_max;
  const auto pairs = ctx.rho_alpha_pairs();
  std::vector<FrameworkSpec> randoms;
  for (int i = 0; i < 2; ++i) randoms.push_back(random_spec(ctx));

  const auto check_spec = [&](const FrameworkSpec& spec, const std::vector<Rational>& d,
                              const std::optional<ParamSet>& eulerian) {
    const std::string name = describe(spec) + "; d=" + str(d);
    const auto diagonal = family_from_recurrence(spec, spec.r, N);
    for (const auto& s : ctx.grid().s_samples) {
      const auto gf = family_ho_from_gf(spec, s, d, N);
      expect_families(ctx, "higher-order GF = recurrence", name, gf, family_ho_recurrence(spec, s, d, N));
      ctx.expect({{"relation", "higher-order GF ODE"}, {"spec", name}, {"s", s.str()}},
                 verify_gf_ode_ho(spec, d, gf, diagonal), "dG/dt = (Q1(s) - Q1(0)(1 - sigma_1)) G + Q2 K G");
      if (eulerian) {
        const auto h = eulerian_ho_values(*eulerian, s, N);
        for (std::size_t n = 0; n <= N; ++n) {
          ctx.expect({{"relation", "higher-order GF = H^(m)_n"}, {"spec", name}, {"s", s.str()}, {"n", str(n)}},
                     gf.values[n], h[n]);
        }
      }
      if (d.size() == 1 && d[0].is_one()) {
        expect_families(ctx, "m = 1 reduction", name, gf, family_from_closed_gf(spec, s, N));
      }
    }
  };

  for (const auto& [rho, alpha] : pairs) {
    const auto spec = FrameworkSpec::eulerian({rho, alpha});
    check_spec(spec, {Rational(1)}, ParamSet::uniform({Rational(1)}, rho, alpha));
  }
  for (const auto& spec : randoms) check_spec(spec, {Rational(1)}, std::nullopt);
  for_each_weights(ctx, [&](std::size_t, const std::vector<Rational>& d) {
    for (const auto& [rho, alpha] : pairs) {
      check_spec(FrameworkSpec::eulerian({rho, alpha}), d, ParamSet::uniform(d, rho, alpha));
    }
    for (const auto& spec : randoms) check_spec(spec, d, std::nullopt);
  });
}

// ---- Moments and cumulants -------------------------------------------------------

void check_moments_cumulants(CheckContext& ctx) {
  const std::size_t N = ctx.grid().n_max;
  for (std::size_t trial = 0; trial < 5; ++trial) {
    std::vector<Rational> kappa(N);
    for (auto& k : kappa) {
      const long num = static_cast<long>(ctx.rng()() % 19) - 9;
      const long den = static_cast<long>(ctx.rng()() % 9) + 1;
      k = Rational(num, den);
    }
    const auto mu = moments_from_cumulants(kappa);
    const auto back = cumulants_from_moments(mu);
    const std::string tag = str(kappa);
    for (std::size_t n = 1; n <= N; ++n) {
      Rational rel = kappa[n - 1];
      for (std::size_t k = 1; k < n; ++k) rel += binomial(n - 1, k - 1) * kappa[k - 1] * mu[n - k - 1];
      ctx.expect({{"relation", "mu_n = kappa_n + sum C(n-1,k-1) kappa_k mu_{n-k}"}, {"kappa", tag}, {"n", str(n)}},
                 mu[n - 1], rel);
      ctx.expect({{"relation", "mu_n = n! [t^n] exp(sum kappa_i t^i/i!)"}, {"kappa", tag}, {"n", str(n)}}, mu[n - 1],
                 complete_bell_via_gf<Rational>(n, kappa));
      ctx.expect({{"relation", "cumulants(moments(kappa)) = kappa"}, {"kappa", tag}, {"n", str(n)}}, back[n - 1],
                 kappa[n - 1]);
    }
  }
}

Grid same(Grid g) { return g; }

Grid bernoulli_number_grid(Grid g) {
  g.n_max = 30;
  return g;
}

Grid product_grid(Grid g) {
  g.m_max = 6;
  return g;
}

std::vector<IdentityCheck> build_registry() {
  using M = CheckMode;
  return {
      {"bernoulli_numbers_alt", "sum_{k=1..n} C(n,k) (-1)^k B_k B_{n-k} = -n B_n", M::symbolic,
       bernoulli_number_grid, check_bernoulli_numbers_alt},
      {"euler_identity", "B_n = -B_{n-1} - (1/n) sum_{k=1..n} C(n,k) B_k B_{n-k}", M::symbolic,
       bernoulli_number_grid, check_euler_identity},
      {"bernoulli_poly_rec", "B_n(s) = s B_{n-1}(s) - (1/n) sum C(n,k) (-1)^k B_k B_{n-k}(s)", M::symbolic, same,
       check_bernoulli_poly_rec},
      {"bernoulli_poly_rec_alt", "B_n(s) = (s-1) B_{n-1}(s) - (1/n) sum C(n,k) B_k B_{n-k}(s)", M::symbolic, same,
       check_bernoulli_poly_rec_alt},
      {"bernoulli_poly_sum", "sum C(n,k) B_k(s) B_{n-k}(t) = n(s+t-1) B_{n-1}(s+t) - (n-1) B_n(s+t)", M::sampled, same,
       check_bernoulli_poly_sum},
      {"bernoulli_ho_rec", "B^(m)_n = s B^(m)_{n-1} - (1/n) sum C(n,k) (-1)^k B_k sigma_k B^(m)_{n-k}", M::symbolic,
       same, check_bernoulli_ho_rec},
      {"bernoulli_ho_rec_alt", "B^(m)_n = (s - sigma_1) B^(m)_{n-1} - (1/n) sum C(n,k) B_k sigma_k B^(m)_{n-k}",
       M::symbolic, same, check_bernoulli_ho_rec_alt},
      {"odd_bernoulli_cancel", "sum C(n,k) [1 - (-1)^k] B_k sigma_k B^(m)_{n-k} = -n sigma_1 B^(m)_{n-1}",
       M::symbolic, same, check_odd_bernoulli_cancel},
      {"order_raising_sum", "sum_i B^(m+1)_n(s|d u d_i) = n (s - sigma_1) B^(m)_{n-1} - (n-m) B^(m)_n", M::symbolic,
       same, check_order_raising_sum},
      {"order_raising_diag", "sum_i B^(m+1)_m(s|d u d_i) = m (s - sigma_1) B^(m)_{m-1}", M::symbolic, same,
       check_order_raising_diag},
      {"norlund_shift", "B^(m+1)_n(s + d_i|d u d_i) - B^(m+1)_n(s|d u d_i) = n d_i B^(m)_{n-1}(s|d)", M::symbolic,
       same, check_norlund_shift},
      {"order_raising_shifted", "sum_i B^(m+1)_n(s + d_i|d u d_i) = n s B^(m)_{n-1} - (n-m) B^(m)_n", M::symbolic,
       same, check_order_raising_shifted},
      {"norlund_ones", "m B^(m+1)_n(s|1) = (m-n) B^(m)_n(s|1) + n (s-m) B^(m)_{n-1}(s|1)", M::symbolic, same,
       check_norlund_ones},
      {"norlund_lambda", "m B^(m+1)_n(s|l1) = (m-n) B^(m)_n(s|l1) + n (s - l m) B^(m)_{n-1}(s|l1)", M::symbolic, same,
       check_norlund_lambda},
      {"norlund_product", "B^(m+1)_m(s|l1) = (s - l m) B^(m)_{m-1}(s|l1) = prod_{i=1..m} (s - l i)", M::symbolic,
       product_grid, check_norlund_product},
      {"eulerian_gen_rec", "H_{n+1}(s) = (s-1) H_n(s) - rho/(1-alpha rho) sum C(n,k) H_k(0) H_{n-k}(s)", M::symbolic,
       same, check_eulerian_gen_rec},
      {"eulerian_ho_rec",
       "H^(m)_{n+1} = (s - sigma_1) H^(m)_n - rho/(1-alpha rho) sum C(n,k) H_k(0) sigma_{k+1} H^(m)_{n-k}",
       M::symbolic, same, check_eulerian_ho_rec},
      {"eulerian_log_gf", "log(G/G(0)) = (s - sigma_1) t - rho/(1-alpha rho) sum H_{i-1}(0) sigma_i t^i/i!",
       M::sampled, same, check_eulerian_log_gf},
      {"bernoulli_log_gf", "log G = s t + sum (-1)^{i-1} B_i sigma_i t^i / (i! i)", M::sampled, same,
       check_bernoulli_log_gf},
      {"bell_bernoulli", "B^(m)_n(s|d) = B_n(s + a_1, a_2, ...), a_i = (-1)^{i-1} B_i sigma_i / i", M::symbolic, same,
       check_bell_bernoulli},
      {"bell_eulerian", "H^(m)_n(s,rho|d) = B_n(s - sigma_1 + a_1, a_2, ...), a_i = -rho H_{i-1}(rho) sigma_i/(1-rho)",
       M::symbolic, same, check_bell_eulerian},
      {"bell_eulerian_gen",
       "H^(m)_n(s,rho,alpha|d) = c^m B_n(s - sigma_1 + a_1, ...), a_i = -rho H_{i-1}(rho,alpha) sigma_i/(1-alpha rho)",
       M::symbolic, same, check_bell_eulerian_gen},
      {"reductions", "E_n = H_n(s,-1,1); H_n(s,rho) = H_n(s,rho,1); B^(m)_n = n! pi_1/(n-m)! H^(m)_{n-m}(s,1,0|d)",
       M::symbolic, same, check_reductions},
      {"framework_recurrence", "P_{n+1}(s,r) = Q1(s) P_n + Q2(r) sum C(n,k) P_k(r,r) P_{n-k} against the closed GF",
       M::sampled, same, check_framework_recurrence},
      {"framework_ho",
       "P^(m)_{n+1} = (Q1(s) - Q1(0)(1 - sigma_1)) P^(m)_n + Q2(r) sum C(n,k) P_k(r,r) sigma_{k+1} P^(m)_{n-k}",
       M::sampled, same, check_framework_ho},
      {"moments_cumulants", "mu_n = B_n(kappa_1, ..., kappa_n) = kappa_n + sum C(n-1,k-1) kappa_k mu_{n-k}",
       M::sampled, same, check_moments_cumulants},
  };
}

std::vector<IdentityCheck> build_fixtures() {
  return {{"euler_identity_sign_flipped", "B_n = +B_{n-1} - (1/n) sum C(n,k) B_k B_{n-k}  (deliberately wrong)",
           CheckMode::symbolic, bernoulli_number_grid, check_euler_identity_sign_flipped}};
}

}  // namespace

CheckContext::CheckContext(Grid grid, std::uint64_t seed) : grid_(std::move(grid)), rng_(seed) {}

const Rational& CheckContext::pick(std::span<const Rational> pool) {
  if (pool.empty()) throw std::invalid_argument("cannot pick from an empty pool");
  return pool[rng_() % pool.size()];
}

std::vector<std::vector<Rational>> CheckContext::weight_vectors(std::size_t m) {
  std::vector<std::vector<Rational>> out(grid_.weight_vectors);
  for (auto& d : out) {
    d.reserve(m);
    while (d.size() < m) {
      const Rational& w = pick(grid_.weight_pool);
      if (!w.is_zero()) d.push_back(w);
    }
  }
  return out;
}

std::vector<std::pair<Rational, Rational>> CheckContext::rho_alpha_pairs() const {
  std::vector<std::pair<Rational, Rational>> out;
  for (const auto& rho : grid_.rho) {
    for (const auto& alpha : grid_.alpha) {
      if (rho.is_one() || (alpha * rho).is_one()) continue;
      out.emplace_back(rho, alpha);
    }
  }
  return out;
}

bool CheckContext::record(const GridPoint& point, bool ok, std::string lhs, std::string rhs) {
  ++cases_;
  if (!ok && !first_failure_) first_failure_ = Counterexample{point, std::move(lhs), std::move(rhs)};
  return ok;
}

bool CheckContext::expect(const GridPoint& point, const Rational& lhs, const Rational& rhs) {
  const bool ok = lhs == rhs;
  return ok ? record(point, true, {}, {}) : record(point, false, lhs.str(), rhs.str());
}

bool CheckContext::expect(const GridPoint& point, const UniPoly& lhs, const UniPoly& rhs) {
  const bool ok = lhs == rhs;
  return ok ? record(point, true, {}, {}) : record(point, false, lhs.pretty(), rhs.pretty());
}

bool CheckContext::expect(const GridPoint& point, bool condition, const std::string& what) {
  return condition ? record(point, true, {}, {}) : record(point, false, "false", what);
}

const std::vector<IdentityCheck>& identity_registry() {
  static const std::vector<IdentityCheck> registry = build_registry();
  return registry;
}

const std::vector<IdentityCheck>& mutation_fixtures() {
  static const std::vector<IdentityCheck> fixtures = build_fixtures();
  return fixtures;
}

const IdentityCheck* find_check(std::string_view name) {
  for (const auto* list : {&identity_registry(), &mutation_fixtures()}) {
    for (const auto& check : *list) {
      if (check.name == name) return &check;
    }
  }
  return nullptr;
}

IdentityReport run_check(const IdentityCheck& check, const GridOverride& override, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  CheckContext ctx(override.apply(check.default_grid(Grid{})), seed ^ fnv1a(check.name));
  std::optional<Counterexample> aborted;
  try {
    check.runner(ctx);
  } catch (const std::exception& e) {
    aborted = Counterexample{{{"exception", e.what()}}, "exception", "no exception"};
  }
  IdentityReport report;
  report.name = check.name;
  report.anchor = check.anchor;
  report.mode = check.mode;
  report.total_cases = ctx.cases();
  report.counterexample = ctx.counterexample() ? ctx.counterexample() : aborted;
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

IdentityReport run_check(std::string_view name, const GridOverride& override, std::uint64_t seed) {
  const auto* check = find_check(name);
  if (check == nullptr) throw std::out_of_range("unknown identity '" + std::string(name) + "'");
  return run_check(*check, override, seed);
}

std::vector<IdentityReport> run_checks(std::span<const IdentityCheck> checks, const GridOverride& override,
                                       std::uint64_t seed) {
  std::vector<IdentityReport> reports(checks.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(checks.size()); ++i) {
    reports[i] = run_check(checks[i], override, seed);
  }
  return reports;
}

std::vector<IdentityReport> run_checks_serial(std::span<const IdentityCheck> checks, const GridOverride& override,
                                              std::uint64_t seed) {
  std::vector<IdentityReport> reports;
  reports.reserve(checks.size());
  for (const auto& check : checks) reports.push_back(run_check(check, override, seed));
  return reports;
}

std::vector<IdentityReport> run_all(std::uint64_t seed, const GridOverride& override) {
  return run_checks(identity_registry(), override, seed);
}

}  // namespace norlund
