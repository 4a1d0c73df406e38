#pragma once

// Order-1 families, each expanded from its own generating function:
//   Bernoulli           t e^{st} / (e^t - 1)
//   Euler               2 e^{st} / (e^t + 1)
//   Eulerian            e^{st} (1 - rho) / (e^t - rho)
//   generalized Eulerian e^{st} (1 - alpha rho) / (e^t - rho)
// Parameters are concrete rationals; polynomials are returned in the symbol s.

#include <cstddef>
#include <vector>

#include "norlund/rational.hpp"
#include "norlund/series.hpp"
#include "norlund/unipoly.hpp"

namespace norlund {

struct EulerianParams {
  Rational rho;
  Rational alpha{1};

  /// Throws SingularParameter for rho = 1 and DegenerateParameter for alpha rho = 1.
  void validate() const;
  /// (1 - alpha rho) / (1 - rho), the value of every family member's GF at t = 0.
  Rational leading_coefficient() const;
  /// rho / (1 - alpha rho), the factor multiplying the Eulerian-number sums.
  Rational cumulant_factor() const;
};

/// n! [t^n] G(t) e^{st} for n = 0 .. N, where G is a rational series of order N.
std::vector<UniPoly> polys_times_exp_st(const Series<Rational>& kernel);

/// t / (e^t - 1) to order N.
Series<Rational> bernoulli_gf(std::size_t order);
/// B_n with B_1 = -1/2.
Rational bernoulli_number(std::size_t n);
/// B_0 .. B_N.
std::vector<Rational> bernoulli_numbers(std::size_t max_n);

UniPoly bernoulli_poly(std::size_t n);
std::vector<UniPoly> bernoulli_poly_table(std::size_t max_n);

/// 2 / (e^t + 1) to order N.
Series<Rational> euler_gf(std::size_t order);
UniPoly euler_poly(std::size_t n);
std::vector<UniPoly> euler_poly_table(std::size_t max_n);

/// Classical (Frobenius) Eulerian polynomials from e^{st}(1 - rho)/(e^t - rho).
UniPoly eulerian_poly(std::size_t n, const Rational& rho);
std::vector<UniPoly> eulerian_poly_table(std::size_t max_n, const Rational& rho);

/// (1 - alpha rho) / (e^t - rho) to order N.
Series<Rational> eulerian_gen_gf(const EulerianParams& p, std::size_t order);
UniPoly eulerian_gen_poly(std::size_t n, const EulerianParams& p);
std::vector<UniPoly> eulerian_gen_poly_table(std::size_t max_n, const EulerianParams& p);

/// H_n(0, rho, alpha).
Rational eulerian_number(std::size_t n, const EulerianParams& p);
std::vector<Rational> eulerian_numbers(std::size_t max_n, const EulerianParams& p);

}  // namespace norlund
