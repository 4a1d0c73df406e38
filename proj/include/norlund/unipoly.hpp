#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "norlund/rational.hpp"

namespace norlund {

/// Dense univariate polynomial in s over the rationals. coeffs()[k] is the
/// coefficient of s^k; trailing zeros are always trimmed, so the zero
/// polynomial has no coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(std::initializer_list<Rational> coeffs);

  static UniPoly constant(const Rational& c);
  static UniPoly monomial(const Rational& c, std::size_t power);
  /// The polynomial s.
  static UniPoly variable();
  /// prod_i (s - root_i).
  static UniPoly from_roots(const std::vector<Rational>& roots);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of s^k, zero beyond the degree.
  Rational coeff(std::size_t k) const;

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// -1 for the zero polynomial.
  std::ptrdiff_t degree() const { return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1; }
  Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

  Rational operator()(const Rational& s) const { return eval(s); }
  Rational eval(const Rational& s) const;
  /// p(s + c) as a polynomial in s.
  UniPoly shifted(const Rational& c) const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Rational& c);
  UniPoly& operator/=(const Rational& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
  friend UniPoly operator/(UniPoly a, const Rational& c) { return a /= c; }

  friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

  /// Human-readable form, e.g. "s^2 - 3*s + 2".
  std::string pretty() const;
  friend std::ostream& operator<<(std::ostream& os, const UniPoly& p);

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace norlund
