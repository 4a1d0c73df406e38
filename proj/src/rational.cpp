#include "norlund/rational.hpp"

#include <cctype>
#include <ostream>

#include "norlund/errors.hpp"

namespace norlund {

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// n-th root of a nonnegative integer, if exact.
std::optional<mpz_class> exact_root(const mpz_class& v, unsigned long n) {
  mpz_class root;
  if (mpz_root(root.get_mpz_t(), v.get_mpz_t(), n) == 0) return std::nullopt;
  return root;
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(num, 1);
  value_ /= den;
  value_.canonicalize();
}

Rational::Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

std::optional<Rational> Rational::try_parse(std::string_view text) {
  std::string_view num = text;
  std::string_view den = "1";
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  std::string_view digits = num;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (!is_digits(digits) || !is_digits(den)) return std::nullopt;

  mpz_class n(std::string(digits), 10);
  if (num.front() == '-') n = -n;
  mpz_class d(std::string(den), 10);
  if (d == 0) return std::nullopt;
  return Rational(n, d);
}

Rational Rational::parse(std::string_view text) {
  if (auto r = try_parse(text)) return *r;
  throw DomainError("invalid rational literal '" + std::string(text) + "'");
}

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  return Rational(mpq_class(1 / value_));
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f, mpz_class(1));
}

std::optional<Rational> rational_power(const Rational& base, const Rational& exponent) {
  if (!exponent.denominator().fits_ulong_p() || !exponent.numerator().fits_slong_p()) {
    return std::nullopt;
  }
  if (base.is_zero()) {
    if (exponent.sign() > 0) return Rational(0);
    return std::nullopt;
  }
  const unsigned long q = exponent.denominator().get_ui();
  const long p = exponent.numerator().get_si();

  mpz_class num = base.numerator();
  const mpz_class den = base.denominator();
  const bool negative = num < 0;
  if (negative) {
    // Real odd roots of negative numbers are fine; even roots are not rational.
    if (q % 2 == 0) return std::nullopt;
    num = -num;
  }
  auto rn = exact_root(num, q);
  auto rd = exact_root(den, q);
  if (!rn || !rd) return std::nullopt;
  if (negative) *rn = -*rn;
  return Rational(*rn, *rd).pow(p);
}

}  // namespace norlund
