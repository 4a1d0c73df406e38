// One line per acceptance criterion: PASS/FAIL, what was checked, elapsed time.
// Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "norlund/cli.hpp"
#include "norlund/framework.hpp"
#include "norlund/higher_order.hpp"
#include "norlund/identities.hpp"
#include "oracles.hpp"

using namespace norlund;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& what) {
    if (ok) detail = what;
    ok = false;
  }
};

const std::vector<Rational> kRho{Rational(1, 2), Rational(-1), Rational(2), Rational(-1, 3)};
const std::vector<Rational> kAlpha{Rational(0), Rational(1), Rational(1, 2)};
const std::vector<Rational> kLambda{Rational(1), Rational(1, 2), Rational(-2)};

std::vector<Rational> weights(oracle::Gen& g, std::size_t m) {
  static const std::vector<Rational> pool{Rational(1),  Rational(-1),   Rational(1, 2), Rational(-1, 2),
                                          Rational(2),  Rational(-2),   Rational(3),    Rational(2, 3)};
  std::vector<Rational> d;
  for (std::size_t i = 0; i < m; ++i) d.push_back(pool[g.integer(0, static_cast<long>(pool.size()) - 1)]);
  return d;
}

// 1. B^(m+1)_m(s | lambda, ..., lambda) = prod_{i=1..m} (s - lambda i)
Outcome product_formula() {
  Outcome o;
  std::size_t cases = 0;
  for (std::size_t m = 1; m <= 6; ++m) {
    for (const auto& lambda : kLambda) {
      const std::vector<Rational> d(m + 1, lambda);
      ++cases;
      if (bernoulli_ho_gf(m, d) != oracle::falling_product(m, lambda))
        o.fail("m=" + std::to_string(m) + " lambda=" + lambda.str());
    }
  }
  if (o.ok) o.detail = std::to_string(cases) + " (m, lambda) pairs";
  return o;
}

// 2. m B^(m+1)_n(s|l) = (m-n) B^(m)_n(s|l) + n (s - l m) B^(m)_{n-1}(s|l)
Outcome norlund_identity() {
  Outcome o;
  std::size_t cases = 0;
  const UniPoly s = UniPoly::variable();
  for (const auto& lambda : kLambda) {
    std::vector<std::vector<UniPoly>> table;  // table[m] = B^(m)_0..10 with weights lambda
    for (std::size_t m = 0; m <= 11; ++m) {
      table.push_back(m == 0 ? std::vector<UniPoly>{} : bernoulli_ho_gf_table(std::vector<Rational>(m, lambda), 10));
    }
    for (std::size_t m = 1; m <= 10; ++m) {
      for (std::size_t n = 0; n <= 10; ++n) {
        const Rational mm(static_cast<long>(m)), nn(static_cast<long>(n));
        const UniPoly lhs = table[m + 1][n] * mm;
        UniPoly rhs = table[m][n] * (mm - nn);
        if (n > 0) rhs = rhs + (s - UniPoly::constant(lambda * mm)) * table[m][n - 1] * nn;
        ++cases;
        if (lhs != rhs) o.fail("n=" + std::to_string(n) + " m=" + std::to_string(m) + " lambda=" + lambda.str());
      }
    }
  }
  // the same identities through the registry, on the n, m <= 10 grid
  GridOverride grid;
  grid.n_max = 10;
  grid.m_max = 10;
  for (const char* name : {"norlund_ones", "norlund_lambda"}) {
    const auto r = run_check(name, grid, 0);
    cases += r.total_cases;
    if (!r.passed()) o.fail(std::string(name) + " failed at lhs=" + r.counterexample->lhs);
  }
  if (o.ok) o.detail = std::to_string(cases) + " cases, n, m <= 10";
  return o;
}

// 3. Euler identity and the alternating-sign identity, n <= 30, on oracle Bernoulli numbers
Outcome bernoulli_number_identities() {
  Outcome o;
  const auto b = oracle::bernoulli_numbers(30);
  const auto lib = bernoulli_numbers(30);
  if (lib != b) o.fail("library Bernoulli numbers differ from the Akiyama-Tanigawa oracle");
  for (std::size_t n = 2; n <= 30; ++n) {
    Rational sum(0), alt(0);
    for (std::size_t k = 1; k <= n; ++k) {
      const Rational term = oracle::binom(n, k) * lib[k] * lib[n - k];
      sum += term;
      alt += (k % 2 == 0 ? term : -term);
    }
    const Rational nn(static_cast<long>(n));
    if (lib[n] != -lib[n - 1] - sum / nn) o.fail("Euler identity at n=" + std::to_string(n));
    if (alt != -nn * lib[n]) o.fail("alternating identity at n=" + std::to_string(n));
  }
  for (const char* name : {"euler_identity", "bernoulli_numbers_alt"}) {
    GridOverride grid;
    grid.n_max = 30;
    if (!run_check(name, grid, 0).passed()) o.fail(std::string(name) + " check failed");
  }
  if (o.ok) o.detail = "n <= 30";
  return o;
}

// 4. Bell representation equals the GF expansion, n <= 12, m <= 4
Outcome bell_vs_gf() {
  Outcome o;
  oracle::Gen g(4);
  std::size_t bern = 0, eul = 0;
  for (std::size_t m = 1; m <= 4; ++m) {
    for (int k = 0; k < 6; ++k) {
      const auto d = weights(g, m);
      ++bern;
      if (bernoulli_ho_bell_table(d, 12) != bernoulli_ho_gf_table(d, 12)) o.fail("Bernoulli, m=" + std::to_string(m));
    }
  }
  for (std::size_t m = 1; m <= 4; ++m) {
    for (int k = 0; k < 6; ++k) {
      const auto d = weights(g, m);
      const auto& rho = kRho[g.integer(0, 3)];
      const auto& alpha = kAlpha[g.integer(0, 2)];
      if (alpha * rho == Rational(1)) continue;
      const auto p = ParamSet::uniform(d, rho, alpha);
      ++eul;
      if (eulerian_ho_bell_table(p, 12) != eulerian_ho_gf_table(p, 12))
        o.fail("Eulerian, m=" + std::to_string(m) + " rho=" + rho.str() + " alpha=" + alpha.str());
    }
  }
  if (bern < 20 || eul < 20) o.fail("fewer than 20 weight vectors");
  if (o.ok) o.detail = std::to_string(bern) + " Bernoulli and " + std::to_string(eul) + " Eulerian weight vectors";
  return o;
}

// 5. Both recurrences reproduce the GF polynomials termwise, n <= 10, m <= 3
Outcome recurrences() {
  Outcome o;
  oracle::Gen g(5);
  std::size_t cases = 0;
  for (const auto& rho : kRho) {
    for (const auto& alpha : kAlpha) {
      if (alpha * rho == Rational(1)) continue;
      const EulerianParams e{rho, alpha};
      const auto gen = eulerian_gen_poly_table(10, e);
      const auto h0 = eulerian_numbers(10, e);
      const Rational k = e.cumulant_factor();
      // H_{n+1}(s) = (s - 1) H_n(s) - rho/(1 - alpha rho) sum_k C(n,k) H_k(0) H_{n-k}(s)
      for (std::size_t n = 0; n < 10; ++n) {
        UniPoly rhs = gen[n] * UniPoly({Rational(-1), Rational(1)});
        for (std::size_t j = 0; j <= n; ++j) rhs = rhs - gen[n - j] * (k * oracle::binom(n, j) * h0[j]);
        ++cases;
        if (rhs != gen[n + 1]) o.fail("order-one recurrence, rho=" + rho.str() + " alpha=" + alpha.str());
      }
      for (std::size_t m = 1; m <= 3; ++m) {
        const auto p = ParamSet::uniform(weights(g, m), rho, alpha);
        const auto rec = eulerian_ho_recurrence_table(p, 10);
        const auto gf = eulerian_ho_gf_table(p, 10);
        for (std::size_t n = 0; n <= 10; ++n) {
          ++cases;
          if (rec[n] != gf[n]) o.fail("higher-order recurrence, n=" + std::to_string(n) + " m=" + std::to_string(m));
        }
      }
    }
  }
  if (o.ok) o.detail = std::to_string(cases) + " polynomials";
  return o;
}

// 6. Eulerian instance of the framework at r = 0
Outcome framework_closure() {
  Outcome o;
  const std::vector<Rational> samples{Rational(0), Rational(1), Rational(-1, 2), Rational(3, 7), Rational(-5, 3)};
  std::size_t cases = 0;
  for (const auto& rho : kRho) {
    for (const auto& alpha : kAlpha) {
      if (alpha * rho == Rational(1)) continue;
      const EulerianParams e{rho, alpha};
      const auto spec = FrameworkSpec::eulerian(e);
      const auto polys = eulerian_gen_poly_table(10, e);
      const auto diag = family_from_closed_gf(spec, spec.r, 10);
      for (const auto& s : samples) {
        const auto closed = family_from_closed_gf(spec, s, 10);
        const auto rec = family_from_recurrence(spec, s, 10);
        for (std::size_t n = 0; n <= 10; ++n) {
          ++cases;
          if (closed.values[n] != polys[n].eval(s) || rec.values[n] != closed.values[n])
            o.fail("rho=" + rho.str() + " alpha=" + alpha.str() + " s=" + s.str() + " n=" + std::to_string(n));
        }
        if (!verify_gf_ode(spec, closed, diag) || !verify_gf_ode(spec, rec, diag))
          o.fail("differential equation, s=" + s.str());
      }
    }
  }
  if (o.ok) o.detail = std::to_string(cases) + " values at " + std::to_string(samples.size()) + " s samples";
  return o;
}

// 7. Q1 = 0, r = s: P_n = n! G0^{n+1} Q2^n
Outcome degenerate_branch() {
  Outcome o;
  std::size_t cases = 0;
  for (const auto& g0 : {Rational(1), Rational(2, 3), Rational(-3)}) {
    for (const auto& q2 : {Rational(1), Rational(-3, 2), Rational(5)}) {
      const BivariateFn q2_fn = [q2](const Rational&, const Rational&) { return q2; };
      for (const auto& s : {Rational(0), Rational(7, 2)}) {
        const auto closed = degenerate_family(q2_fn, g0, s, s, 12);
        const auto rec = degenerate_recurrence(q2_fn, g0, g0, s, s, 12);
        const auto diag = degenerate_diagonal_family(q2, g0, s, 12);
        for (std::size_t n = 0; n <= 12; ++n) {
          const auto expect = oracle::fact(n) * g0.pow(static_cast<long>(n + 1)) * q2.pow(static_cast<long>(n));
          ++cases;
          if (closed.values[n] != expect || rec.values[n] != expect || diag.values[n] != expect)
            o.fail("G0=" + g0.str() + " Q2=" + q2.str() + " n=" + std::to_string(n));
        }
      }
    }
  }
  if (o.ok) o.detail = std::to_string(cases) + " values, n <= 12";
  return o;
}

int run_cli(std::vector<const char*> args, std::string& out) {
  std::ostringstream os, es;
  const int code = cli::run(static_cast<int>(args.size()), args.data(), os, es);
  out = os.str();
  return code;
}

// 8. `verify all` on default grids
Outcome full_registry() {
  Outcome o;
  std::string out;
  const int code = run_cli({"norlund", "verify", "all"}, out);
  const auto j = nlohmann::json::parse(out);
  std::size_t passed = 0;
  for (const auto& r : j["payload"]) {
    if (r["status"] == "pass") {
      ++passed;
    } else {
      o.fail(r["name"].get<std::string>() + " failed");
    }
  }
  if (code != 0) o.fail("exit code " + std::to_string(code));
  if (j["payload"].size() != 26) o.fail("registry has " + std::to_string(j["payload"].size()) + " checks");
  if (o.ok) o.detail = std::to_string(passed) + "/" + std::to_string(j["payload"].size()) + " pass, exit 0";
  return o;
}

// 9. The sign-flipped Euler identity must be caught
Outcome mutation_fixture() {
  Outcome o;
  std::string out;
  const int code = run_cli({"norlund", "verify", "euler_identity_sign_flipped"}, out);
  const auto r = nlohmann::json::parse(out)["payload"][0];
  if (code != 1) o.fail("exit code " + std::to_string(code));
  if (r["status"] != "fail") o.fail("fixture passed");
  const auto& ce = r["counterexample"];
  if (!ce.is_object() || ce["lhs"] == ce["rhs"] || ce["point"].empty()) o.fail("no concrete counterexample");
  if (o.ok) {
    o.detail = "fails at " + ce["point"].dump() + ": lhs " + ce["lhs"].get<std::string>() + " vs rhs " +
               ce["rhs"].get<std::string>();
  }
  return o;
}

struct Criterion {
  const char* title;
  double limit_s;
  std::function<Outcome()> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"product formula, m <= 6", 1.0, product_formula},
      {"Norlund identity and lambda form, n, m <= 10", 5.0, norlund_identity},
      {"Euler and alternating Bernoulli-number identities, n <= 30", 1.0, bernoulli_number_identities},
      {"Bell representation equals GF expansion", 30.0, bell_vs_gf},
      {"recurrences reproduce GF polynomials", 30.0, recurrences},
      {"framework closure for the Eulerian instance", 10.0, framework_closure},
      {"degenerate branch", 1.0, degenerate_branch},
      {"verify all", 120.0, full_registry},
      {"mutation fixture is caught", 10.0, mutation_fixture},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs > c.limit_s) o.fail("took longer than " + std::to_string(c.limit_s) + " s");
    if (!o.ok) ++failures;
    std::printf("%s %zu %s: %s (%.3f s)\n", o.ok ? "PASS" : "FAIL", i + 1, c.title, o.detail.c_str(), secs);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
