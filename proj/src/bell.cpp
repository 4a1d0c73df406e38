#include "norlund/bell.hpp"

#include <string>

#include "norlund/binomial.hpp"
#include "norlund/errors.hpp"
#include "norlund/series.hpp"

namespace norlund {

namespace {

template <class R>
void require_args(std::size_t n, std::size_t have) {
  if (have < n) {
    throw DomainError("complete Bell polynomial B_" + std::to_string(n) + " needs " + std::to_string(n) +
                      " arguments, got " + std::to_string(have));
  }
}

}  // namespace

template <class R>
std::vector<R> complete_bell_table(std::size_t max_n, std::span<const R> args) {
  require_args<R>(max_n, args.size());
  std::vector<R> b(max_n + 1);
  b[0] = RingTraits<R>::one();
  for (std::size_t n = 1; n <= max_n; ++n) {
    R acc{};
    for (std::size_t k = 1; k <= n; ++k) acc = acc + args[k - 1] * b[n - k] * binomial(n - 1, k - 1);
    b[n] = std::move(acc);
  }
  return b;
}

template <class R>
R complete_bell(std::size_t n, std::span<const R> args) {
  return complete_bell_table(n, args)[n];
}

template <class R>
R complete_bell_via_gf(std::size_t n, std::span<const R> args) {
  require_args<R>(n, args.size());
  std::vector<R> values(n + 1);
  for (std::size_t i = 1; i <= n; ++i) values[i] = args[i - 1];
  const auto exponent = Series<R>::from_egf(n, values);
  return series_exp(exponent)[n] * factorial(static_cast<unsigned>(n));
}

template Rational complete_bell<Rational>(std::size_t, std::span<const Rational>);
template UniPoly complete_bell<UniPoly>(std::size_t, std::span<const UniPoly>);
template std::vector<Rational> complete_bell_table<Rational>(std::size_t, std::span<const Rational>);
template std::vector<UniPoly> complete_bell_table<UniPoly>(std::size_t, std::span<const UniPoly>);
template Rational complete_bell_via_gf<Rational>(std::size_t, std::span<const Rational>);
template UniPoly complete_bell_via_gf<UniPoly>(std::size_t, std::span<const UniPoly>);

std::vector<Rational> moments_from_cumulants(std::span<const Rational> kappa) {
  if (kappa.empty()) return {};
  auto table = complete_bell_table(kappa.size(), kappa);
  return {table.begin() + 1, table.end()};
}

std::vector<Rational> cumulants_from_moments(std::span<const Rational> mu) {
  // 1-based in the formulas; mu[n-1] is mu_n.
  std::vector<Rational> kappa(mu.size());
  for (std::size_t n = 1; n <= mu.size(); ++n) {
    Rational acc = mu[n - 1];
    for (std::size_t k = 1; k < n; ++k) acc -= binomial(n - 1, k - 1) * kappa[k - 1] * mu[n - k - 1];
    kappa[n - 1] = acc;
  }
  return kappa;
}

}  // namespace norlund
