#include "causet/bigfloat.hpp"
#include "causet/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace causet {

namespace {

mpfr_prec_t clamp_prec(mpfr_prec_t bits) {
  return std::clamp<mpfr_prec_t>(bits, MPFR_PREC_MIN, MPFR_PREC_MAX);
}

mpfr_prec_t joint_prec(const BigFloat& a, const BigFloat& b) {
  return std::max(a.precision(), b.precision());
}

}  // namespace

BigFloat::BigFloat(mpfr_prec_t bits) {
  mpfr_init2(value_, clamp_prec(bits));
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(long value, mpfr_prec_t bits) : BigFloat(bits) {
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const Integer& value, mpfr_prec_t bits) : BigFloat(bits) {
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& value, mpfr_prec_t bits) : BigFloat(bits) {
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat BigFloat::from_double(double value, mpfr_prec_t bits) {
  BigFloat out(bits);
  mpfr_set_d(out.value_, value, MPFR_RNDN);
  return out;
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::with_precision(mpfr_prec_t bits) const {
  BigFloat out(bits);
  mpfr_set(out.value_, value_, MPFR_RNDN);
  return out;
}

double BigFloat::to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

double BigFloat::log_abs() const {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  if (!is_finite()) return std::numeric_limits<double>::infinity();
  long exp2 = 0;
  double mant = mpfr_get_d_2exp(&exp2, value_, MPFR_RNDN);
  return std::log(std::fabs(mant)) + static_cast<double>(exp2) * std::log(2.0);
}

std::string BigFloat::to_string(int digits) const {
  digits = std::max(digits, 1);
  char* buffer = nullptr;
  int n = mpfr_asprintf(&buffer, "%.*Rg", digits, value_);
  if (n < 0 || buffer == nullptr) throw std::runtime_error("mpfr_asprintf failed");
  std::string out(buffer);
  mpfr_free_str(buffer);
  return out;
}

BigFloat& BigFloat::operator+=(const BigFloat& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat BigFloat::operator-() const {
  BigFloat out(*this);
  mpfr_neg(out.value_, out.value_, MPFR_RNDN);
  return out;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat out(joint_prec(a, b));
  mpfr_add(out.get(), a.get(), b.get(), MPFR_RNDN);
  return out;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat out(joint_prec(a, b));
  mpfr_sub(out.get(), a.get(), b.get(), MPFR_RNDN);
  return out;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat out(joint_prec(a, b));
  mpfr_mul(out.get(), a.get(), b.get(), MPFR_RNDN);
  return out;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat out(joint_prec(a, b));
  mpfr_div(out.get(), a.get(), b.get(), MPFR_RNDN);
  return out;
}

bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.get(), b.get()) != 0; }
bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.get(), b.get()) != 0; }
bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.get(), b.get()) != 0; }
bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.get(), b.get()) != 0; }
bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.get(), b.get()) != 0; }

BigFloat abs(const BigFloat& x) {
  BigFloat out(x.precision());
  mpfr_abs(out.get(), x.get(), MPFR_RNDN);
  return out;
}

BigFloat exp(const BigFloat& x) {
  BigFloat out(x.precision());
  mpfr_exp(out.get(), x.get(), MPFR_RNDN);
  return out;
}

BigFloat log(const BigFloat& x) {
  BigFloat out(x.precision());
  mpfr_log(out.get(), x.get(), MPFR_RNDN);
  return out;
}

BigFloat sqrt(const BigFloat& x) {
  BigFloat out(x.precision());
  mpfr_sqrt(out.get(), x.get(), MPFR_RNDN);
  return out;
}

BigFloat pow(const BigFloat& base, const BigFloat& exponent) {
  BigFloat out(joint_prec(base, exponent));
  mpfr_pow(out.get(), base.get(), exponent.get(), MPFR_RNDN);
  return out;
}

BigFloat pow(const BigFloat& base, const Rational& exponent) {
  const mpfr_prec_t bits = base.precision();
  const mpfr_prec_t guard = bits + 32;
  BigFloat work = base.with_precision(guard);
  BigFloat out(bits);
  if (exponent.get_den() == 1) {
    mpfr_pow_z(out.get(), work.get(), exponent.get_num().get_mpz_t(), MPFR_RNDN);
    return out;
  }
  if (base.sign() < 0) throw DomainError("negative base with fractional exponent");
  if (exponent.get_den().fits_ulong_p()) {
    BigFloat root(guard);
    mpfr_rootn_ui(root.get(), work.get(), exponent.get_den().get_ui(), MPFR_RNDN);
    mpfr_pow_z(out.get(), root.get(), exponent.get_num().get_mpz_t(), MPFR_RNDN);
    return out;
  }
  BigFloat e(exponent, guard);
  mpfr_pow(out.get(), work.get(), e.get(), MPFR_RNDN);
  return out;
}

BigFloat gamma(const BigFloat& x) {
  BigFloat out(x.precision());
  mpfr_gamma(out.get(), x.get(), MPFR_RNDN);
  return out;
}

BigFloat const_pi(mpfr_prec_t bits) {
  BigFloat out(bits);
  mpfr_const_pi(out.get(), MPFR_RNDN);
  return out;
}

mpfr_prec_t bits_for_digits(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(std::max(digits, 1) * 3.3219280948873623)) + 8;
}

}  // namespace causet
