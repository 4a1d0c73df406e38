#include "norlund/series.hpp"

namespace norlund {

Series<Rational> exp_linear(const Rational& c, std::size_t order) {
  std::vector<Rational> out(order + 1);
  Rational term(1);
  for (std::size_t k = 0; k <= order; ++k) {
    if (k > 0) term = term * c * Rational(1, static_cast<long>(k));
    out[k] = term;
  }
  return Series<Rational>(order, std::move(out));
}

Series<UniPoly> exp_st(std::size_t order) {
  std::vector<UniPoly> out(order + 1);
  Rational inv_fact(1);
  for (std::size_t k = 0; k <= order; ++k) {
    if (k > 0) inv_fact *= Rational(1, static_cast<long>(k));
    out[k] = UniPoly::monomial(inv_fact, k);
  }
  return Series<UniPoly>(order, std::move(out));
}

Series<Rational> exp_st(const Rational& s, std::size_t order) { return exp_linear(s, order); }

Series<UniPoly> lift(const Series<Rational>& f) {
  std::vector<UniPoly> out;
  out.reserve(f.order() + 1);
  for (const auto& c : f.coeffs()) out.push_back(UniPoly::constant(c));
  return Series<UniPoly>(f.order(), std::move(out));
}

Series<Rational> evaluate_at(const Series<UniPoly>& f, const Rational& s) {
  std::vector<Rational> out;
  out.reserve(f.order() + 1);
  for (const auto& p : f.coeffs()) out.push_back(p.eval(s));
  return Series<Rational>(f.order(), std::move(out));
}

}  // namespace norlund
