#include <algorithm>
#include <cmath>
#include <map>

#include "causet/errors.hpp"
#include "causet/exact_scalar.hpp"
#include "causet/hypergeom.hpp"

namespace causet::hypergeom {

namespace {

Rational fractional_part(const Rational& x) { return x - floor_rational(x); }

// Cancels equal roots between the two multisets.
void cancel_roots(std::vector<Rational>& num, std::vector<Rational>& den) {
  for (auto it = den.begin(); it != den.end();) {
    auto match = std::find(num.begin(), num.end(), *it);
    if (match != num.end()) {
      num.erase(match);
      it = den.erase(it);
    } else {
      ++it;
    }
  }
}

std::vector<std::vector<Rational>> stirling_second(int n) {
  std::vector<std::vector<Rational>> s(static_cast<size_t>(n + 1), std::vector<Rational>(static_cast<size_t>(n + 1), Rational(0)));
  s[0][0] = 1;
  for (int k = 1; k <= n; ++k) {
    for (int m = 1; m <= k; ++m) {
      s[static_cast<size_t>(k)][static_cast<size_t>(m)] =
          Rational(m) * s[static_cast<size_t>(k - 1)][static_cast<size_t>(m)] + s[static_cast<size_t>(k - 1)][static_cast<size_t>(m - 1)];
    }
  }
  return s;
}

// z^-a gamma(a, z) = e^-z sum_n z^n / (a)_{n+1}, all terms of one sign once
// n > -a, so no cancellation for a > 0.
BigFloat lower_gamma_scaled(const Rational& a, const BigFloat& z, double z_double, mpfr_prec_t bits) {
  BigFloat term(bits);
  BigFloat sum(bits);
  BigFloat a_n(a, bits);
  mpfr_ui_div(term.get(), 1, a_n.get(), MPFR_RNDN);
  const double log_eps = -static_cast<double>(bits) * std::log(2.0);
  for (long n = 0;; ++n) {
    mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
    mpfr_add_ui(a_n.get(), a_n.get(), 1, MPFR_RNDN);
    mpfr_mul(term.get(), term.get(), z.get(), MPFR_RNDN);
    mpfr_div(term.get(), term.get(), a_n.get(), MPFR_RNDN);
    if (static_cast<double>(n) > z_double && term.log_abs() < sum.log_abs() + log_eps) break;
    if (n > 100000000L) throw ConvergenceError("incomplete gamma series did not converge");
  }
  BigFloat neg_z = -z;
  return sum * exp(neg_z);
}

}  // namespace

std::optional<ClosedForm> ClosedForm::build(const HypergeometricSpec& spec_in) {
  const HypergeometricSpec spec = spec_in.reduced();
  if (spec.p() != spec.q()) return std::nullopt;

  // Pair parameters within classes of equal fractional part.
  std::map<Rational, std::vector<Rational>> up_class;
  std::map<Rational, std::vector<Rational>> low_class;
  for (const auto& a : spec.upper()) up_class[fractional_part(a)].push_back(a);
  for (const auto& b : spec.lower()) low_class[fractional_part(b)].push_back(b);
  if (up_class.size() != low_class.size()) return std::nullopt;

  Rational constant(1);
  std::vector<Rational> num_roots;
  std::vector<Rational> den_roots;
  for (auto& [frac, ups] : up_class) {
    auto it = low_class.find(frac);
    if (it == low_class.end() || it->second.size() != ups.size()) return std::nullopt;
    auto& lows = it->second;
    std::sort(ups.begin(), ups.end());
    std::sort(lows.begin(), lows.end());
    for (size_t i = 0; i < ups.size(); ++i) {
      const Rational& a = ups[i];
      const Rational& b = lows[i];
      long m = Rational(a - b).get_num().get_si();
      // (a)_n/(b)_n as a rational function of n.
      if (m >= 0) {
        for (long j = 0; j < m; ++j) {
          num_roots.push_back(b + j);
          constant /= b + j;
        }
      } else {
        for (long j = 0; j < -m; ++j) {
          den_roots.push_back(a + j);
          constant *= a + j;
        }
      }
    }
  }
  cancel_roots(num_roots, den_roots);

  std::vector<Rational> sorted_den = den_roots;
  std::sort(sorted_den.begin(), sorted_den.end());
  if (std::adjacent_find(sorted_den.begin(), sorted_den.end()) != sorted_den.end()) return std::nullopt;
  for (const auto& s : sorted_den) {
    if (s <= 0 && s.get_den() == 1) return std::nullopt;
  }

  RationalPolynomial numerator = RationalPolynomial::constant(constant);
  for (const auto& r : num_roots) numerator *= RationalPolynomial::linear_root(r);
  RationalPolynomial denominator = RationalPolynomial::constant(1);
  for (const auto& s : den_roots) denominator *= RationalPolynomial::linear_root(s);

  ClosedForm out;
  auto [quotient, remainder] = numerator.divmod(denominator);
  (void)remainder;
  const int deg = quotient.degree();
  if (deg >= 0) {
    auto s2 = stirling_second(deg);
    out.falling_.assign(static_cast<size_t>(deg + 1), Rational(0));
    for (int k = 0; k <= deg; ++k) {
      for (int m = 0; m <= k; ++m) {
        out.falling_[static_cast<size_t>(m)] += quotient.coefficient(k) * s2[static_cast<size_t>(k)][static_cast<size_t>(m)];
      }
    }
  }
  for (size_t j = 0; j < den_roots.size(); ++j) {
    const Rational& s = den_roots[j];
    Rational residue = numerator(-s);
    for (size_t k = 0; k < den_roots.size(); ++k) {
      if (k != j) residue /= den_roots[k] - s;
    }
    if (residue != 0) out.poles_.push_back({s, residue});
  }
  std::sort(out.poles_.begin(), out.poles_.end(), [](const Pole& x, const Pole& y) { return x.shift < y.shift; });
  return out;
}

std::optional<Rational> ClosedForm::leading_decay() const {
  if (poles_.empty()) return std::nullopt;
  return poles_.front().shift;
}

BigFloat ClosedForm::evaluate(const Rational& z_in, mpfr_prec_t bits) const {
  if (z_in < 0) throw DomainError("argument must be -z with z >= 0");
  const double z_double = z_in.get_d();
  mpfr_prec_t work = bits + 64;
  for (int attempt = 0; attempt < 6; ++attempt) {
    const BigFloat z(z_in, work);
    const BigFloat minus_z = -z;
    std::vector<BigFloat> pieces;

    // Upper bound (natural log) on every e^-z piece: polynomial part plus
    // the incomplete-gamma tails, each at most 2 e^-z / z once z > 2(a-1).
    double poly_log_mag = -std::numeric_limits<double>::infinity();
    {
      double acc = 0;
      for (size_t m = 0; m < falling_.size(); ++m) {
        acc += std::fabs(falling_[m].get_d()) * std::pow(std::max(z_double, 1.0), static_cast<double>(m));
      }
      for (const auto& pole : poles_) acc += 2 * std::fabs(pole.residue.get_d()) / std::max(z_double, 1e-300);
      if (acc > 0) poly_log_mag = std::log(acc) - z_double;
    }

    std::vector<BigFloat> power_parts;
    double max_power_log = -std::numeric_limits<double>::infinity();
    bool power_form_valid = z_double > 1;
    for (const auto& pole : poles_) {
      if (pole.shift <= 0 || z_double <= 2 * (pole.shift.get_d() - 1)) power_form_valid = false;
    }
    if (power_form_valid && !poles_.empty()) {
      for (const auto& pole : poles_) {
        BigFloat part = BigFloat(pole.residue, work) * gamma(BigFloat(pole.shift, work)) * pow(z, Rational(-pole.shift));
        max_power_log = std::max(max_power_log, part.log_abs());
        power_parts.push_back(std::move(part));
      }
    }

    const bool drop_exponential = power_form_valid && !poles_.empty() &&
                                  poly_log_mag < max_power_log - static_cast<double>(work) * std::log(2.0);
    if (drop_exponential) {
      pieces = std::move(power_parts);
    } else {
      if (!falling_.empty()) {
        BigFloat poly(work);
        for (size_t m = falling_.size(); m-- > 0;) {
          poly *= minus_z;
          poly += BigFloat(falling_[m], work);
        }
        pieces.push_back(poly * exp(minus_z));
      }
      for (const auto& pole : poles_) {
        pieces.push_back(BigFloat(pole.residue, work) * lower_gamma_scaled(pole.shift, z, z_double, work));
      }
    }

    BigFloat total(work);
    double max_piece = -std::numeric_limits<double>::infinity();
    for (const auto& p : pieces) {
      total += p;
      max_piece = std::max(max_piece, p.log_abs());
    }
    if (pieces.empty() || (total.is_zero() && attempt > 0)) return BigFloat(bits);
    const double lost_bits = total.is_zero() ? static_cast<double>(work) : (max_piece - total.log_abs()) / std::log(2.0);
    if (lost_bits < static_cast<double>(work - bits) - 16) return total.with_precision(bits);
    work = bits + static_cast<mpfr_prec_t>(lost_bits) + 64;
  }
  throw ConvergenceError("closed-form evaluation lost all precision to cancellation");
}

BigFloat evaluate(const HypergeometricSpec& spec, const Rational& z, mpfr_prec_t bits) {
  if (auto closed = ClosedForm::build(spec)) return closed->evaluate(z, bits);
  SeriesOptions options;
  options.digits = static_cast<int>(static_cast<double>(bits) / 3.32) + 1;
  return eval_pfq(spec, z, options).value.with_precision(bits);
}

}  // namespace causet::hypergeom
