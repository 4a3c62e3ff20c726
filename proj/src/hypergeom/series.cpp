#include <algorithm>
#include <cmath>
#include <limits>

#include "causet/errors.hpp"
#include "causet/exact_scalar.hpp"
#include "causet/hypergeom.hpp"

namespace causet::hypergeom {

namespace {

constexpr double kLn10 = 2.302585092994046;

// Integer form of the term ratio t_{n+1}/t_n = num(n)/den(n).
class TermRatio {
 public:
  TermRatio(const HypergeometricSpec& spec, const Rational& z) : spec_(spec), z_(z) {
    for (const auto& a : spec.upper()) {
      fixed_den_ *= a.get_den();
    }
    for (const auto& b : spec.lower()) {
      fixed_num_ *= b.get_den();
      max_lower_ = std::max(max_lower_, std::fabs(b.get_d()));
    }
    fixed_num_ *= z.get_num();
    fixed_den_ *= z.get_den();
    z_double_ = z.get_d();
  }

  void at(long n, Integer& num, Integer& den) const {
    num = fixed_num_;
    den = fixed_den_;
    for (const auto& a : spec_.upper()) num *= a.get_num() + a.get_den() * n;
    for (const auto& b : spec_.lower()) den *= b.get_num() + b.get_den() * n;
    den *= n + 1;
    num = -num;
    if (den < 0) {
      den = -den;
      num = -num;
    }
  }

  double log_abs(long n) const {
    double out = std::log(z_double_) - std::log(static_cast<double>(n) + 1);
    for (const auto& a : spec_.upper()) out += std::log(std::fabs(a.get_d() + static_cast<double>(n)));
    for (const auto& b : spec_.lower()) out -= std::log(std::fabs(b.get_d() + static_cast<double>(n)));
    return out;
  }

  bool terminates_at(long n) const {
    for (const auto& a : spec_.upper()) {
      if (a + n == 0) return true;
    }
    return false;
  }

  // Non-increasing majorant of |t_{m+1}/t_m| for all m >= n; +inf while
  // n is still inside the range of the lower parameters.
  double tail_ratio_bound(long n) const {
    const double m = static_cast<double>(n);
    if (m <= max_lower_ + 1) return std::numeric_limits<double>::infinity();
    const auto& up = spec_.upper();
    const auto& low = spec_.lower();
    double bound = z_double_;
    size_t paired = std::min(up.size(), low.size());
    for (size_t i = 0; i < paired; ++i) bound *= (m + std::fabs(up[i].get_d())) / (m - std::fabs(low[i].get_d()));
    for (size_t i = paired; i < low.size(); ++i) bound /= (m - std::fabs(low[i].get_d()));
    if (up.size() > low.size()) {
      bound *= std::max(1.0, (m + std::fabs(up[paired].get_d())) / (m + 1));
    } else {
      bound /= (m + 1);
    }
    return bound;
  }

 private:
  const HypergeometricSpec& spec_;
  Rational z_;
  Integer fixed_num_ = 1;
  Integer fixed_den_ = 1;
  double max_lower_ = 0;
  double z_double_ = 0;
};

// Factor f with sum_{m>=n} |t_m| <= f |t_n|, or +inf when no geometric bound holds yet.
double tail_factor(double rho) {
  if (!(rho < 1.0)) return std::numeric_limits<double>::infinity();
  return (1.0 / (1.0 - rho)) * (1.0 + 1e-12);
}

bool below_threshold(double log_next, double log_threshold, double log_sum) {
  return log_next < log_threshold + std::max(0.0, log_sum) - 1e-9;
}

void check_domain(const HypergeometricSpec& spec, const Rational& z, const SeriesOptions& options) {
  if (options.digits < 10) throw DomainError("precision must be at least 10 digits");
  if (z < 0) throw DomainError("argument must be -z with z >= 0");
  if (options.threshold_scale <= 0) throw DomainError("threshold scale must be positive");
  if (spec.p() > spec.q() + 1) throw DomainError("series diverges for p > q+1: " + spec.to_string());
  if (spec.p() == spec.q() + 1 && z >= 1) throw DomainError("series outside its disc of convergence");
}

SeriesValue sum_exact(const HypergeometricSpec& spec, const Rational& z, const SeriesOptions& options) {
  TermRatio ratio(spec, z);
  const mpfr_prec_t out_bits = bits_for_digits(options.digits) + 32;
  Rational threshold = options.threshold_scale;
  for (int i = 0; i < options.digits; ++i) threshold /= 10;

  Rational term(1);
  Rational sum(0);
  double factor = 0;
  Integer num;
  Integer den;
  long n = 0;
  for (;;) {
    sum += term;
    if (ratio.terminates_at(n) || z == 0) {
      term = 0;
      ++n;
      break;
    }
    ratio.at(n, num, den);
    term *= Rational(num, den);
    term.canonicalize();
    ++n;
    Rational scale = abs(sum) > 1 ? Rational(abs(sum)) : Rational(1);
    factor = tail_factor(ratio.tail_ratio_bound(n));
    if (std::isfinite(factor) && abs(term) * Rational(factor) < threshold * scale) break;
    if (n >= options.max_terms) throw ConvergenceError("term cap reached for " + spec.to_string());
  }

  SeriesValue out;
  out.backend = Backend::exact_rational;
  out.terms = n;
  out.working_bits = 0;
  out.value = BigFloat(sum, out_bits);
  out.tail_bound = BigFloat(out_bits);
  if (term != 0) mpfr_set_q(out.tail_bound.get(), Rational(abs(term) * Rational(factor)).get_mpq_t(), MPFR_RNDU);
  out.rounding_bound = BigFloat(out_bits);
  mpfr_abs(out.rounding_bound.get(), out.value.get(), MPFR_RNDU);
  mpfr_mul_2si(out.rounding_bound.get(), out.rounding_bound.get(), -static_cast<long>(out_bits) + 1, MPFR_RNDU);
  return out;
}

struct Prescan {
  double log_max_term = 0;
  long terms = 0;
};

Prescan prescan(const TermRatio& ratio, double log_threshold, long max_terms) {
  Prescan out;
  double log_t = 0;
  long n = 0;
  for (;;) {
    if (ratio.terminates_at(n)) break;
    log_t += ratio.log_abs(n);
    ++n;
    out.log_max_term = std::max(out.log_max_term, log_t);
    const double f = tail_factor(ratio.tail_ratio_bound(n));
    if (std::isfinite(f) && below_threshold(log_t + std::log(f), log_threshold, 0.0)) break;
    if (n >= max_terms) throw ConvergenceError("term cap would be exceeded");
  }
  out.terms = n;
  return out;
}

SeriesValue sum_big_float(const HypergeometricSpec& spec, const Rational& z, const SeriesOptions& options) {
  TermRatio ratio(spec, z);
  const double log_threshold = -options.digits * kLn10 + std::log(options.threshold_scale.get_d());
  const Prescan scan = prescan(ratio, log_threshold, options.max_terms);
  const mpfr_prec_t out_bits = bits_for_digits(options.digits) + 32;

  mpfr_prec_t bits = bits_for_digits(options.digits) + static_cast<mpfr_prec_t>(scan.log_max_term / std::log(2.0)) +
                     2 * static_cast<mpfr_prec_t>(std::log2(static_cast<double>(scan.terms) + 2)) + 40;

  for (int attempt = 0; attempt < 5; ++attempt) {
    BigFloat term(1L, bits);
    BigFloat sum(bits);
    // Directed-rounding accumulators: sum (2n+3)|t_n| and sum |S_n|.
    BigFloat term_weight(64);
    BigFloat sum_weight(64);
    BigFloat scratch(64);
    Integer num;
    Integer den;
    long n = 0;
    bool exhausted = false;
    double factor = 0;
    for (;;) {
      mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
      mpfr_abs(scratch.get(), term.get(), MPFR_RNDU);
      mpfr_mul_ui(scratch.get(), scratch.get(), static_cast<unsigned long>(2 * n + 3), MPFR_RNDU);
      mpfr_add(term_weight.get(), term_weight.get(), scratch.get(), MPFR_RNDU);
      mpfr_abs(scratch.get(), sum.get(), MPFR_RNDU);
      mpfr_add(sum_weight.get(), sum_weight.get(), scratch.get(), MPFR_RNDU);
      if (ratio.terminates_at(n) || z == 0) {
        mpfr_set_zero(term.get(), 1);
        exhausted = true;
        ++n;
        break;
      }
      ratio.at(n, num, den);
      mpfr_mul_z(term.get(), term.get(), num.get_mpz_t(), MPFR_RNDN);
      mpfr_div_z(term.get(), term.get(), den.get_mpz_t(), MPFR_RNDN);
      ++n;
      factor = tail_factor(ratio.tail_ratio_bound(n));
      if (std::isfinite(factor) && below_threshold(term.log_abs() + std::log(factor), log_threshold, sum.log_abs())) break;
      if (n >= options.max_terms) throw ConvergenceError("term cap reached for " + spec.to_string());
    }

    SeriesValue out;
    out.backend = Backend::big_float;
    out.terms = n;
    out.working_bits = bits;
    out.value = sum.with_precision(out_bits);
    out.tail_bound = BigFloat(out_bits);
    if (!exhausted) {
      mpfr_abs(out.tail_bound.get(), term.get(), MPFR_RNDU);
      mpfr_mul_d(out.tail_bound.get(), out.tail_bound.get(), factor, MPFR_RNDU);
    }
    BigFloat bound(64);
    mpfr_add(bound.get(), term_weight.get(), sum_weight.get(), MPFR_RNDU);
    mpfr_mul_d(bound.get(), bound.get(), 1.01, MPFR_RNDU);
    mpfr_mul_2si(bound.get(), bound.get(), -static_cast<long>(bits) + 1, MPFR_RNDU);
    BigFloat out_round(64);
    mpfr_abs(out_round.get(), sum.get(), MPFR_RNDU);
    mpfr_mul_2si(out_round.get(), out_round.get(), -static_cast<long>(out_bits) + 1, MPFR_RNDU);
    mpfr_add(bound.get(), bound.get(), out_round.get(), MPFR_RNDU);
    out.rounding_bound = bound;

    const double allowed = log_threshold + std::max(0.0, sum.log_abs()) - std::log(2.0);
    if (bound.log_abs() <= allowed) return out;
    bits += static_cast<mpfr_prec_t>((bound.log_abs() - allowed) / std::log(2.0)) + 64;
  }
  throw ConvergenceError("working precision could not control rounding for " + spec.to_string());
}

}  // namespace

SeriesValue eval_pfq(const HypergeometricSpec& spec_in, const Rational& z, const SeriesOptions& options) {
  const HypergeometricSpec spec = spec_in.reduced();
  check_domain(spec, z, options);
  Backend backend = options.backend;
  if (backend == Backend::automatic) backend = z <= options.exact_z_threshold ? Backend::exact_rational : Backend::big_float;
  if (backend == Backend::exact_rational) return sum_exact(spec, z, options);
  return sum_big_float(spec, z, options);
}

}  // namespace causet::hypergeom
