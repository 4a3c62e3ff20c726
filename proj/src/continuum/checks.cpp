#include <algorithm>
#include <cmath>

#include "causet/coefficients.hpp"
#include "causet/continuum.hpp"
#include "causet/convergence.hpp"
#include "causet/errors.hpp"
#include "causet/parallel.hpp"

namespace causet::continuum {

namespace {

void check_ladder(const std::vector<Rational>& ladder) {
  if (ladder.size() < 2) throw DomainError("ladder needs at least two points");
  for (size_t i = 0; i < ladder.size(); ++i) {
    if (ladder[i] <= 0) throw DomainError("ladder points must be positive");
    if (i > 0 && ladder[i] <= ladder[i - 1]) throw DomainError("ladder must be increasing");
  }
}

ConvergenceReport run(const std::string& quantity, const KSumExpansion& expansion, const ExactScalar& target,
                      const std::vector<Rational>& ladder, int digits, size_t monotone_from) {
  check_ladder(ladder);
  if (digits < 10) throw DomainError("digits must be >= 10");
  const mpfr_prec_t bits = bits_for_digits(digits) + 32;

  ConvergenceReport report;
  report.quantity = quantity;
  report.dimension = expansion.dimension;
  report.digits = digits;
  report.ladder = ladder;
  report.target = target.is_zero() ? BigFloat(bits) : target.evaluate(bits);
  report.monotone_from = monotone_from;
  const size_t n = ladder.size();
  report.values.assign(n, BigFloat(bits));
  report.abs_errors.assign(n, BigFloat(bits));
  report.rel_errors.assign(n, 0.0);
  report.largest_term.assign(n, 0.0);

  parallel_for(n, [&](size_t i) {
    TermValues tv = evaluate_detailed(expansion, ladder[i], bits);
    double largest = 0;
    for (const auto& t : tv.terms) largest = std::max(largest, std::fabs(t.to_double()));
    BigFloat value = tv.total.with_precision(bits);
    BigFloat err = abs(value - report.target);
    report.rel_errors[i] = (report.target.is_zero() ? err : err / abs(report.target)).to_double();
    report.values[i] = std::move(value);
    report.abs_errors[i] = std::move(err);
    report.largest_term[i] = largest;
  });

  std::vector<double> z;
  for (const auto& x : ladder) z.push_back(x.get_d());
  const double floor = std::pow(10.0, -(digits - 5));
  report.fitted_exponent = fitted_decay_exponent(z, report.rel_errors, floor, 1);
  report.monotone = monotone_decreasing(report.rel_errors, floor, monotone_from);
  report.final_rel_error = report.rel_errors.back();

  const Asymptotics asym = asymptotics(expansion, bits);
  report.predicted_exponent = asym.decay;
  report.asymptotic_limit = asym.limit;
  return report;
}

}  // namespace

std::vector<Rational> default_ladder(int d) {
  if (d < 2) throw DomainError("dimension must be >= 2");
  long top_exp = 2 * d;
  if (d == 2) top_exp = 4;
  if (d == 3) top_exp = 7;
  if (d == 4) top_exp = 6;
  Integer top;
  mpz_ui_pow_ui(top.get_mpz_t(), 10, static_cast<unsigned long>(top_exp));
  return hypergeom::geometric_ladder(10, Rational(top), 4);
}

ConvergenceReport check_beta(int d, const std::vector<Rational>& ladder, int digits) {
  const ExactScalar s = coefficients::sphere_volume(d - 2);
  const KSumExpansion e = scaled(build_beta_expansion(d), s / ExactScalar(2 * (d - 1)));
  return run("beta", e, ExactScalar(1) / coefficients::beta(d), ladder, digits, 1);
}

ConvergenceReport check_alpha_over_beta(int d, const std::vector<Rational>& ladder, int digits) {
  const ExactScalar s = coefficients::sphere_volume(d - 2);
  const KSumExpansion e = scaled(build_alpha_beta_expansion(d), s);
  return run("alpha/beta", e, -coefficients::alpha_over_beta(d), ladder, digits, 1);
}

RicciReport check_ricci(int d, const std::vector<Rational>& ladder, int digits) {
  RicciReport out;
  out.i_r = run("I_R", assemble_ricci_r(d), ExactScalar(ratio(-1, 2)), ladder, digits, 1);
  out.i_00 = run("I_00", assemble_ricci_00(d), ExactScalar(0), ladder, digits, 1);
  return out;
}

}  // namespace causet::continuum
