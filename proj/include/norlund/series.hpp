#pragma once

// Truncated formal power series in t: coefficients of t^0 .. t^N are kept and
// every operation is exact modulo t^(N+1).
//
// The coefficient ring is a template parameter (Rational, or UniPoly for
// series whose coefficients are polynomials in s), so mixing rings is a
// compile error rather than a runtime check.

#include <concepts>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "norlund/errors.hpp"
#include "norlund/kernels.hpp"
#include "norlund/rational.hpp"
#include "norlund/unipoly.hpp"

namespace norlund {

template <class R>
struct RingTraits;

template <>
struct RingTraits<Rational> {
  static Rational one() { return Rational(1); }
  static bool is_one(const Rational& x) { return x.is_one(); }
  static bool is_zero(const Rational& x) { return x.is_zero(); }
  static Rational invert_constant(const Rational& c) {
    if (c.is_zero()) throw DomainError("series constant term 0 is not invertible");
    return c.inverse();
  }
};

template <>
struct RingTraits<UniPoly> {
  static UniPoly one() { return UniPoly::constant(Rational(1)); }
  static bool is_one(const UniPoly& x) { return x == one(); }
  static bool is_zero(const UniPoly& x) { return x.is_zero(); }
  static UniPoly invert_constant(const UniPoly& c) {
    if (c.is_zero() || !c.is_constant()) {
      throw DomainError("series constant term " + c.pretty() + " is not invertible");
    }
    return UniPoly::constant(c.coeff(0).inverse());
  }
};

/// Rational or UniPoly: a commutative ring containing the rationals.
template <class R>
concept CoefficientRing = requires(R a, const R& b, const Rational& q) {
  { RingTraits<R>::one() } -> std::same_as<R>;
  { a + b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { a * q } -> std::convertible_to<R>;
  { a == b } -> std::convertible_to<bool>;
};

template <CoefficientRing R>
class Series {
 public:
  using Ring = R;

  /// The zero series truncated at order N.
  explicit Series(std::size_t order) : coeffs_(order + 1) {}
  /// Missing coefficients are zero; coefficients past the order are dropped.
  Series(std::size_t order, std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1);
  }

  static Series one(std::size_t order) {
    Series s(order);
    s.coeffs_[0] = RingTraits<R>::one();
    return s;
  }

  /// Series with coefficient values[k] / k!, i.e. sum_k values[k] t^k / k!.
  static Series from_egf(std::size_t order, std::span<const R> values) {
    Series s(order);
    Rational inv_fact(1);
    for (std::size_t k = 0; k <= order && k < values.size(); ++k) {
      if (k > 0) inv_fact *= Rational(1, static_cast<long>(k));
      s.coeffs_[k] = values[k] * inv_fact;
    }
    return s;
  }

  std::size_t order() const { return coeffs_.size() - 1; }
  const R& operator[](std::size_t k) const { return coeffs_.at(k); }
  R& operator[](std::size_t k) { return coeffs_.at(k); }
  const std::vector<R>& coeffs() const { return coeffs_; }

  /// k! times the coefficient of t^k, for k = 0 .. N.
  std::vector<R> egf_coefficients() const {
    std::vector<R> out(coeffs_.size());
    Rational fact(1);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (k > 0) fact *= Rational(static_cast<long>(k));
      out[k] = coeffs_[k] * fact;
    }
    return out;
  }

  friend bool operator==(const Series& a, const Series& b) = default;

 private:
  std::vector<R> coeffs_;
};

namespace detail {

template <class R>
void require_same_order(const Series<R>& f, const Series<R>& g, const char* op) {
  if (f.order() != g.order()) {
    throw std::invalid_argument(std::string(op) + ": truncation orders differ (" +
                                std::to_string(f.order()) + " vs " + std::to_string(g.order()) + ")");
  }
}

}  // namespace detail

template <CoefficientRing R>
Series<R> series_add(const Series<R>& f, const Series<R>& g) {
  detail::require_same_order(f, g, "series_add");
  std::vector<R> out(f.coeffs());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = out[k] + g[k];
  return Series<R>(f.order(), std::move(out));
}

template <CoefficientRing R>
Series<R> series_sub(const Series<R>& f, const Series<R>& g) {
  detail::require_same_order(f, g, "series_sub");
  std::vector<R> out(f.coeffs());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = out[k] - g[k];
  return Series<R>(f.order(), std::move(out));
}

template <CoefficientRing R>
Series<R> series_mul(const Series<R>& f, const Series<R>& g) {
  detail::require_same_order(f, g, "series_mul");
  const std::span<const R> a(f.coeffs());
  const std::span<const R> b(g.coeffs());
  return Series<R>(f.order(), kernels::convolve(a, b, f.order() + 1));
}

/// Multiplies every coefficient by the ring element c.
template <CoefficientRing R>
Series<R> series_scale(const Series<R>& f, const R& c) {
  std::vector<R> out(f.coeffs());
  for (auto& x : out) x = x * c;
  return Series<R>(f.order(), std::move(out));
}

template <CoefficientRing R>
  requires(!std::same_as<R, Rational>)
Series<R> series_scale(const Series<R>& f, const Rational& c) {
  std::vector<R> out(f.coeffs());
  for (auto& x : out) x = x * c;
  return Series<R>(f.order(), std::move(out));
}

/// Substitution t -> c t: the coefficient of t^k is multiplied by c^k.
template <CoefficientRing R>
Series<R> series_scale_t(const Series<R>& f, const Rational& c) {
  std::vector<R> out(f.coeffs());
  Rational pw(1);
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (k > 0) pw *= c;
    out[k] = out[k] * pw;
  }
  return Series<R>(f.order(), std::move(out));
}

/// Multiplicative inverse by the convolution recurrence
/// g_0 = 1/f_0, g_k = -g_0 sum_{j=1..k} f_j g_{k-j}.
template <CoefficientRing R>
Series<R> series_inv(const Series<R>& f) {
  const std::size_t n = f.order();
  const R g0 = RingTraits<R>::invert_constant(f[0]);
  std::vector<R> g(n + 1);
  g[0] = g0;
  for (std::size_t k = 1; k <= n; ++k) {
    R acc{};
    for (std::size_t j = 1; j <= k; ++j) acc = acc + f[j] * g[k - j];
    g[k] = -(acc * g0);
  }
  return Series<R>(n, std::move(g));
}

/// exp(f) for f with zero constant term, from (exp f)' = f' exp f:
/// k g_k = sum_{j=1..k} j f_j g_{k-j}.
template <CoefficientRing R>
Series<R> series_exp(const Series<R>& f) {
  if (!RingTraits<R>::is_zero(f[0])) throw DomainError("series_exp: constant term must be zero");
  const std::size_t n = f.order();
  std::vector<R> g(n + 1);
  g[0] = RingTraits<R>::one();
  for (std::size_t k = 1; k <= n; ++k) {
    R acc{};
    for (std::size_t j = 1; j <= k; ++j) acc = acc + f[j] * g[k - j] * Rational(static_cast<long>(j));
    g[k] = acc * Rational(1, static_cast<long>(k));
  }
  return Series<R>(n, std::move(g));
}

/// log(f) for f with constant term 1, from f' = (log f)' f:
/// g_k = f_k - (1/k) sum_{j=1..k-1} j g_j f_{k-j}.
template <CoefficientRing R>
Series<R> series_log(const Series<R>& f) {
  if (!RingTraits<R>::is_one(f[0])) throw DomainError("series_log: constant term must be 1");
  const std::size_t n = f.order();
  std::vector<R> g(n + 1);
  for (std::size_t k = 1; k <= n; ++k) {
    R acc{};
    for (std::size_t j = 1; j < k; ++j) acc = acc + g[j] * f[k - j] * Rational(static_cast<long>(j));
    g[k] = f[k] - acc * Rational(1, static_cast<long>(k));
  }
  return Series<R>(n, std::move(g));
}

/// f^gamma = exp(gamma log f) for f with constant term 1.
template <CoefficientRing R>
Series<R> series_pow(const Series<R>& f, const Rational& gamma) {
  if (!RingTraits<R>::is_one(f[0])) throw DomainError("series_pow: constant term must be 1");
  auto l = series_log(f);
  std::vector<R> scaled(l.coeffs());
  for (auto& x : scaled) x = x * gamma;
  return series_exp(Series<R>(f.order(), std::move(scaled)));
}

/// d/dt, truncated at order N-1 (the derivative of a series known mod
/// t^(N+1) is known mod t^N). The derivative of an order-0 series is the
/// order-0 zero series.
template <CoefficientRing R>
Series<R> series_derivative(const Series<R>& f) {
  const std::size_t n = f.order();
  if (n == 0) return Series<R>(0);
  std::vector<R> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = f[k + 1] * Rational(static_cast<long>(k + 1));
  return Series<R>(n - 1, std::move(out));
}

/// Drops coefficients above the new order (which must not exceed the old one).
template <CoefficientRing R>
Series<R> series_truncate(const Series<R>& f, std::size_t order) {
  if (order > f.order()) throw std::invalid_argument("series_truncate: cannot raise the order");
  return Series<R>(order, std::vector<R>(f.coeffs().begin(), f.coeffs().begin() + order + 1));
}

/// e^{c t}: coefficients c^k / k!.
Series<Rational> exp_linear(const Rational& c, std::size_t order);

/// A concrete rational value of s, or the symbol s itself.
struct Symbolic {};
using SValue = std::variant<Symbolic, Rational>;

/// e^{s t}, with coefficients s^k / k!.
Series<UniPoly> exp_st(std::size_t order);
Series<Rational> exp_st(const Rational& s, std::size_t order);

/// Embeds a rational series into the polynomial-coefficient ring.
Series<UniPoly> lift(const Series<Rational>& f);
/// Evaluates every polynomial coefficient at s.
Series<Rational> evaluate_at(const Series<UniPoly>& f, const Rational& s);

template <CoefficientRing R>
Series<R> operator+(const Series<R>& f, const Series<R>& g) {
  return series_add(f, g);
}
template <CoefficientRing R>
Series<R> operator-(const Series<R>& f, const Series<R>& g) {
  return series_sub(f, g);
}
template <CoefficientRing R>
Series<R> operator*(const Series<R>& f, const Series<R>& g) {
  return series_mul(f, g);
}

}  // namespace norlund
