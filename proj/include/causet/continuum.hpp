#pragma once

#include <optional>
#include <string>
#include <vector>

#include "causet/exact_scalar.hpp"
#include "causet/hypergeom.hpp"

namespace causet::continuum {

/// One summand  weight * z^z_power * pFq(spec; -z).
struct KSumTerm {
  ExactScalar weight;
  Rational z_power;
  hypergeom::HypergeometricSpec spec;
  std::string label;  // e.g. "k=2" or "x=1,k=0"
};

struct KSumExpansion {
  int dimension = 0;
  bool even = true;
  std::vector<KSumTerm> terms;
  std::string source;  // which integral the expansion represents
};

/// Monomial weight coefficient * U^(m-q) V^q of a homogeneous degree-m
/// polynomial in the light-cone distances U = -u, V = -v.
struct Monomial {
  int q = 0;
  ExactScalar coefficient;
  std::string label;
};

/// l^-(m+2) O^(d) of the integral of W(U,V) exp(-c (UV)^(d/2)/l^d) over
/// 0 <= V <= U <= L, one term per monomial, with z = c (L/l)^d.
KSumExpansion expand_weighted_integral(int d, int m, const std::vector<Monomial>& weight, const std::string& source);

/// l^-(d+2) O^(d) integral of ((v-u)/sqrt2)^d, parameter lists written out
/// per parity; S/(2(d-1)) times this tends to 1/beta.
KSumExpansion build_beta_expansion(int d);

/// l^-d O^(d) integral of ((v-u)/sqrt2)^(d-2); S times this tends to -alpha/beta.
KSumExpansion build_alpha_beta_expansion(int d);

struct RicciExpansions {
  KSumExpansion t1;  // ((v-u)/sqrt2)^d / (d-1)
  KSumExpansion t2;  // ((v-u)/sqrt2)^(d-2) ((v+u)/sqrt2)^2
  KSumExpansion t3;  // ((v-u)/sqrt2)^(d-2) u v
};

/// T1 reuses the beta expansion; T2 and T3 come from the monomial builder.
RicciExpansions build_ricci_expansions(int d);

/// T1 reconstructed by the monomial builder instead of the beta expansion.
KSumExpansion build_t1_independent(int d);

/// l d/dl applied to the pFq factors: weight *= d prod(a)/prod(b),
/// z_power += 1, parameters shifted by one.
KSumExpansion apply_l_dl(const KSumExpansion& expansion);

KSumExpansion scaled(const KSumExpansion& expansion, const ExactScalar& factor);
KSumExpansion concatenated(const KSumExpansion& a, const KSumExpansion& b);

/// I_R and I_00 as single expansions including the beta S prefactor.
KSumExpansion assemble_ricci_r(int d);
KSumExpansion assemble_ricci_00(int d);

struct TermValues {
  BigFloat total;
  std::vector<BigFloat> terms;
};

/// Term values and their sum at z; working precision is raised until the
/// sum keeps `bits` bits despite cancellation between terms.
TermValues evaluate_detailed(const KSumExpansion& expansion, const Rational& z, mpfr_prec_t bits);
BigFloat evaluate(const KSumExpansion& expansion, const Rational& z, mpfr_prec_t bits);

struct Asymptotics {
  BigFloat limit;                    // coefficient of z^0 as z -> infinity
  std::optional<Rational> decay;     // leading nonzero negative power, as a positive number
  bool bounded = true;               // false if a growing power survives
};

/// Power-law asymptotics from the pole parts of every term.
Asymptotics asymptotics(const KSumExpansion& expansion, mpfr_prec_t bits);

struct ConvergenceReport {
  std::string quantity;
  int dimension = 0;
  int digits = 0;
  std::vector<Rational> ladder;
  std::vector<BigFloat> values;
  BigFloat target;
  std::vector<BigFloat> abs_errors;
  std::vector<double> rel_errors;  // abs error when the target is zero
  /// Largest single-term magnitude at each ladder point.
  std::vector<double> largest_term;
  double fitted_exponent = 0;
  std::optional<Rational> predicted_exponent;
  BigFloat asymptotic_limit;
  bool monotone = false;
  size_t monotone_from = 1;
  double final_rel_error = 0;
};

/// Geometric 4-point ladder from 10 with integer points; top 10^4 for d = 2,
/// 10^7 for d = 3, 10^6 for d = 4 and 10^(2d) otherwise.
std::vector<Rational> default_ladder(int d);

ConvergenceReport check_beta(int d, const std::vector<Rational>& ladder, int digits = 40);
ConvergenceReport check_alpha_over_beta(int d, const std::vector<Rational>& ladder, int digits = 40);

struct RicciReport {
  ConvergenceReport i_r;
  ConvergenceReport i_00;
};

RicciReport check_ricci(int d, const std::vector<Rational>& ladder, int digits = 40);

struct LimitParameterSets {
  std::vector<std::vector<Rational>> flat;
  std::vector<std::pair<Rational, std::vector<Rational>>> gamma;
};

/// Flat and gamma-type limit families met in the dimension-d beta and
/// alpha/beta expansions; the flat factor of every term is its own flat
/// family and two-pole functions are split by partial fractions.
LimitParameterSets limit_parameter_sets(int d);

}  // namespace causet::continuum
