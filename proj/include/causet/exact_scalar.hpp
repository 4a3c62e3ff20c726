#pragma once

#include <map>
#include <string>

#include "causet/bigfloat.hpp"

namespace causet {

/// Exact real of the form  q * pi^e0 * prod p^e_p * prod Gamma(r)^e_r.
///
/// q is rational, exponents are rational, p are primes with exponent in
/// [0,1), and Gamma arguments are reduced into (0,1) with Gamma(1/2)
/// folded into pi. Equality is equality of this canonical form; identities
/// such as reflection or duplication are not applied.
class ExactScalar {
 public:
  enum class AtomKind { pi = 0, radical = 1, gamma = 2 };

  struct Atom {
    AtomKind kind;
    Rational arg;  // prime for radicals, reduced argument for Gamma, 0 for pi
    bool operator<(const Atom& other) const;
    bool operator==(const Atom& other) const;
  };

  ExactScalar();
  ExactScalar(long value);  // NOLINT(google-explicit-constructor)
  ExactScalar(const Rational& value);  // NOLINT(google-explicit-constructor)

  static ExactScalar pi(const Rational& exponent = 1);
  /// base^exponent for a positive rational base.
  static ExactScalar power(const Rational& base, const Rational& exponent);
  /// Gamma(x); throws DomainError at the poles x = 0, -1, -2, ...
  static ExactScalar gamma(const Rational& x);

  ExactScalar pow(const Rational& exponent) const;

  ExactScalar operator-() const;
  ExactScalar& operator*=(const ExactScalar& rhs);
  ExactScalar& operator/=(const ExactScalar& rhs);
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
  friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }
  bool operator==(const ExactScalar& other) const;
  bool operator!=(const ExactScalar& other) const { return !(*this == other); }

  bool is_zero() const { return coefficient_ == 0; }
  bool is_rational() const { return atoms_.empty(); }
  int sign() const { return sgn(coefficient_); }
  const Rational& coefficient() const { return coefficient_; }
  const std::map<Atom, Rational>& atoms() const { return atoms_; }
  /// Throws DomainError unless is_rational().
  const Rational& rational_value() const;

  BigFloat evaluate(mpfr_prec_t bits) const;
  double to_double() const;
  /// Decimal with `digits` significant digits, correct in all printed digits
  /// up to final rounding.
  std::string decimal(int digits) const;
  /// Canonical exact text, e.g. "-4*pi^(1/2)*Gamma(1/3)^(-1)".
  std::string exact_string() const;

 private:
  void multiply_atom(const Atom& atom, const Rational& exponent);
  void multiply_rational_power(const Rational& base, const Rational& exponent);
  void normalize();

  Rational coefficient_;
  std::map<Atom, Rational> atoms_;
};

/// num/den in lowest terms.
Rational ratio(long num, long den);
std::string rational_string(const Rational& q);
Rational parse_rational(const std::string& text);
Rational floor_rational(const Rational& q);
Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);
/// Rising factorial (x)_n for rational x.
Rational rising(const Rational& x, unsigned long n);

}  // namespace causet
