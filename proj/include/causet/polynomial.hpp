#pragma once

#include <string>
#include <vector>

#include "causet/bigfloat.hpp"

namespace causet {

/// Dense polynomial with rational coefficients, ascending powers.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coefficients);
  static RationalPolynomial constant(const Rational& c);
  /// x + r
  static RationalPolynomial linear_root(const Rational& r);

  /// -1 for the zero polynomial.
  int degree() const;
  bool is_zero() const { return degree() < 0; }
  Rational coefficient(int k) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational operator()(const Rational& x) const;
  BigFloat operator()(const BigFloat& x) const;

  /// Coefficients up to and including degree `n`.
  RationalPolynomial truncated(int n) const;

  RationalPolynomial& operator+=(const RationalPolynomial& rhs);
  RationalPolynomial& operator*=(const RationalPolynomial& rhs);
  RationalPolynomial& operator*=(const Rational& rhs);
  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
  friend RationalPolynomial operator*(RationalPolynomial a, const RationalPolynomial& b) { return a *= b; }
  friend RationalPolynomial operator*(RationalPolynomial a, const Rational& b) { return a *= b; }
  bool operator==(const RationalPolynomial& other) const { return coeffs_ == other.coeffs_; }

  /// Quotient and remainder of division by a nonzero polynomial.
  std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& divisor) const;

  std::string to_string(const std::string& variable = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace causet
