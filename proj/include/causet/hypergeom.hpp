#pragma once

#include <optional>
#include <string>
#include <vector>

#include "causet/bigfloat.hpp"
#include "causet/polynomial.hpp"

namespace causet::hypergeom {

/// Parameters of pFq(a_1..a_p; b_1..b_q; -z). Evaluation is always at a
/// non-positive argument, written -z with z >= 0.
class HypergeometricSpec {
 public:
  HypergeometricSpec() = default;
  /// Throws DomainError if a lower parameter is 0, -1, -2, ...
  HypergeometricSpec(std::vector<Rational> upper, std::vector<Rational> lower);

  const std::vector<Rational>& upper() const { return upper_; }
  const std::vector<Rational>& lower() const { return lower_; }
  size_t p() const { return upper_.size(); }
  size_t q() const { return lower_.size(); }

  /// Cancels coincident upper/lower pairs and sorts both lists.
  HypergeometricSpec reduced() const;
  /// All parameters shifted by +1 (derivative rule).
  HypergeometricSpec shifted() const;
  /// prod(a) / prod(b), the factor produced by d/dz.
  Rational derivative_factor() const;

  bool operator==(const HypergeometricSpec& other) const;
  std::string to_string() const;

 private:
  std::vector<Rational> upper_;
  std::vector<Rational> lower_;
};

enum class Backend { automatic, exact_rational, big_float };

const char* backend_name(Backend backend);

struct SeriesOptions {
  int digits = 30;
  long max_terms = 1000000;
  Rational exact_z_threshold = 50;
  Backend backend = Backend::automatic;
  /// Multiplies the stop threshold 10^-digits (used to probe tail soundness).
  Rational threshold_scale = 1;
};

struct SeriesValue {
  BigFloat value;
  BigFloat tail_bound;      // bound on the omitted terms
  BigFloat rounding_bound;  // bound on accumulated rounding in the summed terms
  long terms = 0;
  Backend backend = Backend::automatic;
  mpfr_prec_t working_bits = 0;
};

/// Sum of prod(a_j)_n / prod(b_j)_n (-z)^n / n!.
SeriesValue eval_pfq(const HypergeometricSpec& spec, const Rational& z, const SeriesOptions& options = {});

/// Closed-form evaluator for specs whose upper and lower parameters differ
/// by integers after cancellation: the term ratio is then a rational
/// function of n, decomposed into falling-factorial polynomial part plus
/// simple poles,
///     sum (-z)^n/n! R(n) = e^-z sum_m q_m (-z)^m + sum_j A_j z^-a_j gamma(a_j, z).
class ClosedForm {
 public:
  struct Pole {
    Rational shift;     // a_j in 1/(n + a_j)
    Rational residue;   // A_j
  };

  /// std::nullopt when the parameters are outside the supported class.
  static std::optional<ClosedForm> build(const HypergeometricSpec& spec);

  /// Coefficients q_m in the falling-factorial basis n(n-1)...(n-m+1).
  const std::vector<Rational>& falling_coefficients() const { return falling_; }
  const std::vector<Pole>& poles() const { return poles_; }

  /// Value at -z, correct to about `bits` bits relative to the largest of
  /// the exponential and power-law pieces.
  BigFloat evaluate(const Rational& z, mpfr_prec_t bits) const;

  /// Smallest shift over poles with nonzero residue, i.e. the power of the
  /// leading z^-a decay; nullopt if there are none.
  std::optional<Rational> leading_decay() const;

 private:
  std::vector<Rational> falling_;
  std::vector<Pole> poles_;
};

/// Closed form when available, otherwise the series.
BigFloat evaluate(const HypergeometricSpec& spec, const Rational& z, mpfr_prec_t bits);

/// O^(d)(H) = prod_{i=1}^{p} (H + 2i)/(2i), p = d/2+1 (even) or (d+1)/2 (odd).
RationalPolynomial od_operator_polynomial(int d);

/// Polynomial P(w) with O^(d) e^-w = P(w) e^-w, built from the series of
/// e^-w truncated at order N and checked to have degree n_d - 1.
RationalPolynomial apply_od_to_exponential(int d, int truncation_order);

/// pFq parameters whose negative-argument series equals O^(d) e^-z.
HypergeometricSpec generating_spec(int d);

/// G_d(z) = e^z pFq(generating_spec(d); -z) as an exact polynomial.
RationalPolynomial generating_polynomial(int d);

/// k-th derivative at zero, k! [z^k] P.
Rational derivative_at_zero(const RationalPolynomial& poly, int k);

struct LimitRow {
  Rational z;
  BigFloat value;
  BigFloat target;
  BigFloat abs_error;
  BigFloat rel_error;  // equals abs_error when the target is zero
};

struct LimitReport {
  std::string identity;  // "limit0" or "limit"
  std::string parameters;
  int digits = 0;
  std::vector<LimitRow> rows;
  bool monotone = false;
  /// Least-squares slope of -log(error) against log(z) past the first point.
  double fitted_exponent = 0;
  double final_rel_error = 0;
};

/// e^z pFq(a; a-1; -z) prod(a_j - 1)/(-z)^q  ->  1.
LimitReport verify_limit_flat(const std::vector<Rational>& a, const std::vector<Rational>& ladder, int digits = 77);

/// z^a0 pFq(a0, a; a0+1, a-1; -z)  ->  Gamma(a0+1) prod (a_j - a0 - 1)/(a_j - 1).
LimitReport verify_limit_gamma(const Rational& a0, const std::vector<Rational>& a, const std::vector<Rational>& ladder,
                               int digits = 77);

std::vector<Rational> geometric_ladder(const Rational& z_min, const Rational& z_max, int points);

}  // namespace causet::hypergeom
