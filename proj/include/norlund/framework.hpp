#pragma once

// Polynomial families P_n(s, r) whose generating function G(s, r, t) solves
//
//   dG/dt = Q1(s) G(s,r,t) + Q2(r) G(r,r,t) G(s,r,t),   G(s,r,0) = G0,
//
// equivalently P_{n+1}(s,r) = Q1(s) P_n(s,r) + Q2(r) sum_k C(n,k) P_k(r,r) P_{n-k}(s,r).
//
// For Q1 not identically zero the solution is
//
//   G = G0 Q1(r) e^{Q1(s) t} / (Q1(r) + G0 Q2(r) (1 - e^{Q1(r) t})).
//
// The solution is built as H(s,t) F(r,t), which pins G(s,r,0) to a function
// of r alone. The closed forms here therefore require G0(s,r) = G0(r,r) and
// reject other specs; the recurrence accepts any G0.
//
// For Q1 == 0 (the degenerate branch) the ODE becomes dG/dt = Q2(s,r) G(r,r,t) G
// and G = G0 [1 - Q2(r,r) t G0^{Q2(r,r)/Q2(s,r)}]^{-Q2(s,r)/Q2(r,r)}, where the
// inner power plays the role of G0(r,r).
//
// s is always a concrete rational in this module.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "norlund/classical.hpp"
#include "norlund/rational.hpp"
#include "norlund/unipoly.hpp"

namespace norlund {

using BivariateFn = std::function<Rational(const Rational& s, const Rational& r)>;

struct FrameworkSpec {
  UniPoly q1;      ///< Q1 as a polynomial in s.
  UniPoly q2;      ///< Q2 as a polynomial in r.
  BivariateFn g0;  ///< G0(s, r) = P_0(s, r).
  Rational r;

  bool is_degenerate() const { return q1.is_zero(); }
  /// Q1(s) = s - 1, Q2 = -rho/(1 - alpha rho), G0 = (1 - alpha rho)/(1 - rho), r = 0.
  /// Generates H_n(s, rho, alpha).
  static FrameworkSpec eulerian(const EulerianParams& p);
  /// G0 independent of s.
  static BivariateFn constant_g0(const Rational& value);
};

/// P_0(s,r) .. P_N(s,r) at one concrete s.
struct FrameworkFamily {
  Rational s;
  Rational r;
  std::vector<Rational> values;
};

/// n! [t^n] of the closed-form G. Degenerate specs are routed to degenerate_family
/// with Q2(s,r) = Q2(r). Throws DomainError when Q1(r) = 0 and UnsupportedParameter
/// when G0 depends on s.
FrameworkFamily family_from_closed_gf(const FrameworkSpec& spec, const Rational& s, std::size_t max_n);

/// The r = s closed form G0(s) Q1(s) e^{Q1(s) t} / (Q1(s) + G0(s) Q2(s) (1 - e^{Q1(s) t})),
/// expanded directly (Q1(s) != 0 required).
FrameworkFamily family_diagonal_closed_gf(const FrameworkSpec& spec, const Rational& s, std::size_t max_n);

/// The recurrence, after first building the diagonal P_k(r, r) the same way.
FrameworkFamily family_from_recurrence(const FrameworkSpec& spec, const Rational& s, std::size_t max_n);

/// P_n = G0 B_n(Q1(s) + Q2(r) P_0(r,r), Q2(r) P_1(r,r), ...), i.e. the statement
/// log(G / G0) = Q1(s) t + Q2(r) sum_i P_{i-1}(r,r) t^i / i!.
FrameworkFamily family_from_bell(const FrameworkSpec& spec, const Rational& s, std::size_t max_n);

/// Exact check of dG/dt = q1_s G + q2 G_diag G modulo t^N, N = len(values) - 1.
bool satisfies_gf_ode(const Rational& q1_s, const Rational& q2, std::span<const Rational> values,
                      std::span<const Rational> diagonal);

/// Builds G(s,r,t) and G(r,r,t) from the closed form and checks the ODE.
bool verify_gf_ode(const FrameworkSpec& spec, const Rational& s, std::size_t max_n);
/// Checks a given family against a given diagonal family.
bool verify_gf_ode(const FrameworkSpec& spec, const FrameworkFamily& family, const FrameworkFamily& diagonal);

// ---- higher order ----------------------------------------------------------

/// n! [t^n] of e^{[Q1(s)-Q1(0)]t} prod_i e^{Q1(0) d_i t} / (G0^{-1} + Q2(r)(1 - e^{Q1(r) d_i t})/Q1(r)).
FrameworkFamily family_ho_from_gf(const FrameworkSpec& spec, const Rational& s, std::span<const Rational> d,
                                  std::size_t max_n);

/// P^(m)_{n+1} = (Q1(s) - Q1(0)(1 - sigma_1)) P^(m)_n + Q2(r) sum_k C(n,k) P_k(r,r) sigma_{k+1} P^(m)_{n-k},
/// seeded with P^(m)_0 = G0^m.
FrameworkFamily family_ho_recurrence(const FrameworkSpec& spec, const Rational& s, std::span<const Rational> d,
                                     std::size_t max_n);

/// dG/dt = (Q1(s) - Q1(0)(1 - sigma_1)) G + Q2(r) K(t) G with K = sum_k P_k(r,r) sigma_{k+1} t^k / k!.
bool verify_gf_ode_ho(const FrameworkSpec& spec, std::span<const Rational> d, const FrameworkFamily& family,
                      const FrameworkFamily& diagonal);

// ---- degenerate branch (Q1 == 0) -------------------------------------------

/// Closed form G0 [1 - Q2(r,r) t G0^{Q2(r,r)/Q2(s,r)}]^{-Q2(s,r)/Q2(r,r)}.
/// Throws DomainError when Q2(r,r) or Q2(s,r) vanishes and UnsupportedParameter
/// when the inner power is irrational.
FrameworkFamily degenerate_family(const BivariateFn& q2, const Rational& g0, const Rational& s, const Rational& r,
                                  std::size_t max_n);

/// The inner power G0^{Q2(r,r)/Q2(s,r)}, i.e. the diagonal value G0(r,r) implied
/// by the closed form. std::nullopt when irrational.
std::optional<Rational> degenerate_diagonal_seed(const BivariateFn& q2, const Rational& g0, const Rational& s,
                                                 const Rational& r);

/// P_{n+1}(s,r) = Q2(s,r) sum_k C(n,k) P_k(r,r) P_{n-k}(s,r), seeded with
/// P_0(s,r) = g0_sr and P_0(r,r) = g0_rr. Works for any rational inputs.
FrameworkFamily degenerate_recurrence(const BivariateFn& q2, const Rational& g0_sr, const Rational& g0_rr,
                                      const Rational& s, const Rational& r, std::size_t max_n);

/// r = s: G = G0 / (1 - G0 Q2 t), expanded as a series.
FrameworkFamily degenerate_diagonal_family(const Rational& q2, const Rational& g0, const Rational& s,
                                           std::size_t max_n);

}  // namespace norlund
