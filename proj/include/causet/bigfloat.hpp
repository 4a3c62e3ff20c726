#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace causet {

using Integer = mpz_class;
using Rational = mpq_class;

/// Owning MPFR value with a per-object binary precision.
///
/// Binary operators produce a result at the larger operand precision and
/// round to nearest. Nothing here touches MPFR's global default precision,
/// so values can be used freely from OpenMP worker threads.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t bits = 128);
  BigFloat(long value, mpfr_prec_t bits);
  BigFloat(const Integer& value, mpfr_prec_t bits);
  BigFloat(const Rational& value, mpfr_prec_t bits);
  static BigFloat from_double(double value, mpfr_prec_t bits);

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_ptr get() noexcept { return value_; }
  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(value_); }

  /// Copy rounded to a different precision.
  BigFloat with_precision(mpfr_prec_t bits) const;

  double to_double() const;
  /// Natural log of |x| as a double; -inf for zero. Safe for huge exponents.
  double log_abs() const;
  bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const noexcept { return mpfr_number_p(value_) != 0; }
  int sign() const noexcept { return mpfr_sgn(value_); }

  /// Decimal rendering with `digits` significant digits (printf %Rg style).
  std::string to_string(int digits) const;

  BigFloat& operator+=(const BigFloat& rhs);
  BigFloat& operator-=(const BigFloat& rhs);
  BigFloat& operator*=(const BigFloat& rhs);
  BigFloat& operator/=(const BigFloat& rhs);
  BigFloat operator-() const;

 private:
  mpfr_t value_;
};

BigFloat operator+(const BigFloat& a, const BigFloat& b);
BigFloat operator-(const BigFloat& a, const BigFloat& b);
BigFloat operator*(const BigFloat& a, const BigFloat& b);
BigFloat operator/(const BigFloat& a, const BigFloat& b);

bool operator<(const BigFloat& a, const BigFloat& b);
bool operator>(const BigFloat& a, const BigFloat& b);
bool operator<=(const BigFloat& a, const BigFloat& b);
bool operator>=(const BigFloat& a, const BigFloat& b);
bool operator==(const BigFloat& a, const BigFloat& b);

BigFloat abs(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat pow(const BigFloat& base, const BigFloat& exponent);
/// base^(p/q) for rational exponent; base must be positive unless q == 1.
BigFloat pow(const BigFloat& base, const Rational& exponent);
BigFloat gamma(const BigFloat& x);
BigFloat const_pi(mpfr_prec_t bits);

/// Bits needed to carry `digits` decimal digits.
mpfr_prec_t bits_for_digits(int digits);

}  // namespace causet
