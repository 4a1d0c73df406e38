#pragma once

// Reference computations used only by tests. They avoid the library's series
// and Bell code so a shared bug cannot hide on both sides of a comparison.

#include <cstddef>
#include <functional>
#include <random>
#include <vector>

#include "norlund/rational.hpp"
#include "norlund/unipoly.hpp"

namespace oracle {

using norlund::Rational;
using norlund::UniPoly;

inline Rational binom(std::size_t n, std::size_t k) {
  if (k > n) return Rational(0);
  Rational r(1);
  for (std::size_t i = 1; i <= k; ++i) r = r * Rational(static_cast<long>(n - k + i)) / Rational(static_cast<long>(i));
  return r;
}

inline Rational fact(std::size_t n) {
  Rational r(1);
  for (std::size_t i = 2; i <= n; ++i) r *= Rational(static_cast<long>(i));
  return r;
}

// Akiyama-Tanigawa gives B_1 = +1/2; flip it to match t/(e^t - 1).
inline std::vector<Rational> bernoulli_numbers(std::size_t max_n) {
  std::vector<Rational> out;
  std::vector<Rational> a(max_n + 1);
  for (std::size_t m = 0; m <= max_n; ++m) {
    a[m] = Rational(1, static_cast<long>(m + 1));
    for (std::size_t j = m; j >= 1; --j) a[j - 1] = Rational(static_cast<long>(j)) * (a[j - 1] - a[j]);
    out.push_back(a[0]);
  }
  if (max_n >= 1) out[1] = -out[1];
  return out;
}

// B_n(s) = sum_k C(n,k) B_k s^{n-k}
inline UniPoly bernoulli_poly(std::size_t n) {
  const auto b = bernoulli_numbers(n);
  std::vector<Rational> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) c[n - k] = binom(n, k) * b[k];
  return UniPoly(c);
}

// From E_n(s+1) + E_n(s) = 2 s^n.
inline std::vector<UniPoly> euler_polys(std::size_t max_n) {
  std::vector<UniPoly> e;
  for (std::size_t n = 0; n <= max_n; ++n) {
    UniPoly p = UniPoly::monomial(Rational(1), n);
    for (std::size_t k = 0; k < n; ++k) p = p - e[k] * (binom(n, k) / Rational(2));
    e.push_back(p);
  }
  return e;
}

// Plain truncated product of coefficient vectors.
inline std::vector<Rational> mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < out.size() && j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

inline std::vector<UniPoly> mul(const std::vector<UniPoly>& a, const std::vector<UniPoly>& b) {
  std::vector<UniPoly> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < out.size() && j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
  return out;
}

// e^{ct} to order N
inline std::vector<Rational> exp_series(const Rational& c, std::size_t order) {
  std::vector<Rational> out(order + 1);
  Rational pw(1);
  for (std::size_t k = 0; k <= order; ++k) {
    out[k] = pw / fact(k);
    pw *= c;
  }
  return out;
}

// (1 - alpha rho) / (e^{dt} - rho) by long division against e^{dt} - rho.
inline std::vector<Rational> eulerian_factor(const Rational& d, const Rational& rho, const Rational& alpha,
                                             std::size_t order) {
  auto den = exp_series(d, order);
  den[0] -= rho;
  std::vector<Rational> f(order + 1);
  for (std::size_t k = 0; k <= order; ++k) {
    Rational acc = k == 0 ? Rational(1) - alpha * rho : Rational(0);
    for (std::size_t j = 0; j < k; ++j) acc -= f[j] * den[k - j];
    f[k] = acc / den[0];
  }
  return f;
}

// n! [t^n] kernel(t) e^{st}, as polynomials in s.
inline std::vector<UniPoly> times_exp_st(const std::vector<Rational>& kernel) {
  const std::size_t order = kernel.size() - 1;
  std::vector<UniPoly> kern(order + 1), est(order + 1);
  for (std::size_t k = 0; k <= order; ++k) {
    kern[k] = UniPoly::constant(kernel[k]);
    est[k] = UniPoly::monomial(Rational(1) / fact(k), k);
  }
  auto prod = mul(kern, est);
  for (std::size_t k = 0; k <= order; ++k) prod[k] = prod[k] * fact(k);
  return prod;
}

// B^(m)_n(s|d) for n = 0..N straight from prod_i d_i t/(e^{d_i t} - 1) e^{st}.
inline std::vector<UniPoly> bernoulli_ho(const std::vector<Rational>& d, std::size_t max_n) {
  const auto b = bernoulli_numbers(max_n);
  std::vector<Rational> kernel(max_n + 1);
  kernel[0] = Rational(1);
  for (const auto& di : d) {
    std::vector<Rational> f(max_n + 1);
    for (std::size_t k = 0; k <= max_n; ++k) f[k] = b[k] * di.pow(static_cast<long>(k)) / fact(k);
    kernel = mul(kernel, f);
  }
  return times_exp_st(kernel);
}

inline std::vector<UniPoly> eulerian_ho(const std::vector<Rational>& d, const std::vector<Rational>& rho,
                                        const std::vector<Rational>& alpha, std::size_t max_n) {
  std::vector<Rational> kernel(max_n + 1);
  kernel[0] = Rational(1);
  for (std::size_t i = 0; i < d.size(); ++i) kernel = mul(kernel, eulerian_factor(d[i], rho[i], alpha[i], max_n));
  return times_exp_st(kernel);
}

// prod_{i=1..m} (s - lambda i)
inline UniPoly falling_product(std::size_t m, const Rational& lambda) {
  UniPoly p = UniPoly::constant(Rational(1));
  for (std::size_t i = 1; i <= m; ++i) p = p * UniPoly({-lambda * Rational(static_cast<long>(i)), Rational(1)});
  return p;
}

// Complete Bell polynomial as a sum over set partitions of {1..n}:
// each block of size k contributes a_k.
inline Rational bell_by_partitions(std::size_t n, const std::vector<Rational>& a) {
  Rational total(0);
  std::vector<std::size_t> block_sizes;
  std::function<void(std::size_t)> place = [&](std::size_t item) {
    if (item == n) {
      Rational term(1);
      for (auto sz : block_sizes) term *= a[sz - 1];
      total += term;
      return;
    }
    for (std::size_t b = 0; b < block_sizes.size(); ++b) {
      ++block_sizes[b];
      place(item + 1);
      --block_sizes[b];
    }
    block_sizes.push_back(1);
    place(item + 1);
    block_sizes.pop_back();
  };
  place(0);
  return total;
}

// Small random rationals for property tests.
struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
  Rational rational(long bound = 9) { return Rational(integer(-bound, bound), integer(1, bound)); }
  Rational nonzero(long bound = 9) {
    for (;;) {
      auto r = rational(bound);
      if (!r.is_zero()) return r;
    }
  }
  std::vector<Rational> vec(std::size_t n, long bound = 9) {
    std::vector<Rational> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(rational(bound));
    return v;
  }
};

}  // namespace oracle
