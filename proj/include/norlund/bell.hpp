#pragma once

// Complete Bell polynomials B_n(a_1, ..., a_n), defined by
//   exp(sum_{i>=1} a_i t^i / i!) = sum_{n>=0} B_n(a) t^n / n!,
// and the moment/cumulant correspondence mu_n = B_n(kappa_1, ..., kappa_n).
//
// Two independent routes are provided: the binomial recurrence (default) and
// coefficient extraction from the exponential series. Both are instantiated
// for Rational and UniPoly arguments.

#include <cstddef>
#include <span>
#include <vector>

#include "norlund/rational.hpp"
#include "norlund/unipoly.hpp"

namespace norlund {

/// Bell arguments a_1 .. a_n. Stored 0-based: args[i-1] holds a_i.
template <class R>
using BellArgs = std::vector<R>;

/// B_n(a) by B_n = sum_{k=1..n} C(n-1, k-1) a_k B_{n-k}, B_0 = 1.
/// Throws DomainError when fewer than n arguments are supplied.
template <class R>
R complete_bell(std::size_t n, std::span<const R> args);

/// B_0 .. B_N in one pass of the same recurrence.
template <class R>
std::vector<R> complete_bell_table(std::size_t max_n, std::span<const R> args);

/// n! [t^n] exp(sum_i a_i t^i / i!).
template <class R>
R complete_bell_via_gf(std::size_t n, std::span<const R> args);

/// mu_n = B_n(kappa_1 .. kappa_n) for n = 1 .. len(kappa).
std::vector<Rational> moments_from_cumulants(std::span<const Rational> kappa);
/// Inverse of moments_from_cumulants:
/// kappa_n = mu_n - sum_{k=1..n-1} C(n-1, k-1) kappa_k mu_{n-k}.
std::vector<Rational> cumulants_from_moments(std::span<const Rational> mu);

}  // namespace norlund
