#pragma once

// Higher-order families with weight vector d = (d_1 .. d_m):
//   B^(m)_n(s|d)            e^{st} prod_i d_i t / (e^{d_i t} - 1)
//   E^(m)_n(s|d)            e^{st} prod_i 2 / (e^{d_i t} + 1)
//   H^(m)_n(s,rho,alpha|d)  e^{st} prod_i (1 - alpha_i rho_i) / (e^{d_i t} - rho_i)
//
// The generating-function expansion is the reference route. The Bell
// representation and the Eulerian recurrence are independent routes that are
// checked against it.

#include <cstddef>
#include <span>
#include <vector>

#include "norlund/bell.hpp"
#include "norlund/classical.hpp"
#include "norlund/rational.hpp"
#include "norlund/series.hpp"
#include "norlund/unipoly.hpp"

namespace norlund {

/// Per-factor parameters (d_i, rho_i, alpha_i), i = 1 .. m.
struct ParamSet {
  std::vector<Rational> d;
  std::vector<Rational> rho;
  std::vector<Rational> alpha;

  /// Every factor shares rho and alpha.
  static ParamSet uniform(std::vector<Rational> d, const Rational& rho, const Rational& alpha);

  std::size_t m() const { return d.size(); }
  /// Lengths agree, m >= 1, every d_i != 0, rho_i != 1, alpha_i rho_i != 1.
  void validate() const;
  bool is_uniform() const;
  /// prod_i (1 - alpha_i rho_i) / (1 - rho_i).
  Rational leading_coefficient() const;
};

/// sigma[k] = sum_i d_i^k for k = 0 .. K (sigma[0] = m).
struct PowerSums {
  std::vector<Rational> sigma;
  const Rational& operator[](std::size_t k) const { return sigma.at(k); }
};

PowerSums power_sums(std::span<const Rational> d, std::size_t max_k);

/// Throws DomainError if d is empty or holds a zero weight.
void validate_weights(std::span<const Rational> d);

// ---- Bernoulli of higher order ------------------------------------------

/// prod_i d_i t / (e^{d_i t} - 1) to order N.
Series<Rational> bernoulli_ho_kernel(std::span<const Rational> d, std::size_t order);
/// B^(m)_0 .. B^(m)_N in s.
std::vector<UniPoly> bernoulli_ho_gf_table(std::span<const Rational> d, std::size_t max_n);
UniPoly bernoulli_ho_gf(std::size_t n, std::span<const Rational> d);
/// Scalar-s fast path: B^(m)_0(s) .. B^(m)_N(s) at a concrete s.
std::vector<Rational> bernoulli_ho_values(std::span<const Rational> d, const Rational& s, std::size_t max_n);

/// a_1 = s + B_1 sigma_1, a_i = (-1)^{i-1} B_i sigma_i / i.
BellArgs<UniPoly> bernoulli_ho_bell_args(std::span<const Rational> d, std::size_t max_n);
std::vector<UniPoly> bernoulli_ho_bell_table(std::span<const Rational> d, std::size_t max_n);
UniPoly bernoulli_ho_bell(std::size_t n, std::span<const Rational> d);

/// H^(m)_j(s, 1, 0 | d) for j = 0 .. max_j: the nonnegative-power part of
/// the Laurent expansion of e^{st} prod_i 1/(e^{d_i t} - 1), scaled by j!.
/// rho = 1 is outside the Eulerian domain, so the expansion is taken
/// formally, with the t^{-m} pole factored out.
std::vector<UniPoly> eulerian_ho_at_rho_one(std::span<const Rational> d, std::size_t max_j);
/// B^(m)_n(s|d) = n! pi_1 / (n-m)! H^(m)_{n-m}(s, 1, 0 | d), pi_1 = prod_i d_i.
/// Requires n >= m.
UniPoly bernoulli_ho_from_eulerian(std::size_t n, std::span<const Rational> d);

// ---- Euler and Eulerian of higher order ---------------------------------

/// prod_i (1 - alpha_i rho_i) / (e^{d_i t} - rho_i) to order N.
Series<Rational> eulerian_ho_kernel(const ParamSet& p, std::size_t order);
std::vector<UniPoly> eulerian_ho_gf_table(const ParamSet& p, std::size_t max_n);
UniPoly eulerian_ho_gf(std::size_t n, const ParamSet& p);
std::vector<Rational> eulerian_ho_values(const ParamSet& p, const Rational& s, std::size_t max_n);

/// E^(m)_n(s|d) from prod_i 2 / (e^{d_i t} + 1).
std::vector<UniPoly> euler_ho_gf_table(std::span<const Rational> d, std::size_t max_n);
UniPoly euler_ho_gf(std::size_t n, std::span<const Rational> d);

/// Bell route for uniform rho, alpha:
///   H^(m)_n = c^m B_n(s - sigma_1 + a_1, a_2, ...),
///   a_i = -rho H_{i-1}(0, rho, alpha) sigma_i / (1 - alpha rho),
///   c = (1 - alpha rho) / (1 - rho).
/// c = 1 when alpha = 1; otherwise the generating function does not start
/// at 1 and the constant has to be carried along.
/// Throws UnsupportedParameter for non-uniform rho or alpha.
std::vector<UniPoly> eulerian_ho_bell_table(const ParamSet& p, std::size_t max_n);
UniPoly eulerian_ho_bell(std::size_t n, const ParamSet& p);

/// One step of
///   H^(m)_{n+1} = (s - sigma_1) H^(m)_n
///                 - rho/(1 - alpha rho) sum_{k=0..n} C(n,k) H_k(0,rho,alpha) sigma_{k+1} H^(m)_{n-k}
/// given table = H^(m)_0 .. H^(m)_n (at least n+1 entries). Uniform p only.
UniPoly eulerian_ho_recurrence_step(std::size_t n, const ParamSet& p, std::span<const UniPoly> table);
/// H^(m)_0 .. H^(m)_N by iterating the step from H^(m)_0 = c^m.
std::vector<UniPoly> eulerian_ho_recurrence_table(const ParamSet& p, std::size_t max_n);

}  // namespace norlund
