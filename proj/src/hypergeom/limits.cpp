#include <cmath>

#include "causet/convergence.hpp"
#include "causet/errors.hpp"
#include "causet/exact_scalar.hpp"
#include "causet/hypergeom.hpp"
#include "causet/parallel.hpp"

namespace causet::hypergeom {

namespace {

constexpr double kLog10E = 0.4342944819032518;

std::string list_string(const std::vector<Rational>& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + rational_string(v[i]);
  return s + "]";
}

void check_ladder(const std::vector<Rational>& ladder) {
  if (ladder.empty()) throw DomainError("empty z ladder");
  for (size_t i = 0; i < ladder.size(); ++i) {
    if (ladder[i] <= 0) throw DomainError("ladder points must be positive");
    if (i > 0 && ladder[i] <= ladder[i - 1]) throw DomainError("ladder must be increasing");
  }
}

void finish(LimitReport& report) {
  std::vector<double> z;
  std::vector<double> err;
  for (const auto& row : report.rows) {
    z.push_back(row.z.get_d());
    err.push_back(row.rel_error.to_double());
  }
  const double floor = std::pow(10.0, -(report.digits - 5));
  report.monotone = monotone_decreasing(err, floor, 1);
  report.fitted_exponent = fitted_decay_exponent(z, err, floor, 1);
  report.final_rel_error = err.back();
}

LimitRow make_row(const Rational& z, BigFloat value, const BigFloat& target) {
  LimitRow row{z, std::move(value), target, BigFloat(target.precision()), BigFloat(target.precision())};
  row.abs_error = abs(row.value - row.target);
  row.rel_error = row.target.is_zero() ? row.abs_error : row.abs_error / abs(row.target);
  return row;
}

}  // namespace

LimitReport verify_limit_flat(const std::vector<Rational>& a, const std::vector<Rational>& ladder, int digits) {
  if (a.empty()) throw DomainError("flat limit needs q >= 1");
  for (const auto& x : a) {
    if (x == 1) throw DomainError("a_j = 1 makes the lower parameter vanish");
  }
  check_ladder(ladder);
  std::vector<Rational> lower;
  Rational norm(1);
  for (const auto& x : a) {
    lower.push_back(x - 1);
    norm *= x - 1;
  }
  const HypergeometricSpec spec(a, lower);
  const mpfr_prec_t bits = bits_for_digits(digits) + 32;

  LimitReport report;
  report.identity = "limit0";
  report.parameters = "a=" + list_string(a);
  report.digits = digits;
  report.rows.resize(ladder.size(), LimitRow{0, BigFloat(bits), BigFloat(bits), BigFloat(bits), BigFloat(bits)});
  parallel_for(ladder.size(), [&](size_t i) {
    const Rational& z = ladder[i];
    const double zd = z.get_d();
    SeriesOptions options;
    options.digits = digits + static_cast<int>(std::ceil(zd * kLog10E)) + 10;
    const SeriesValue s = eval_pfq(spec, z, options);
    const BigFloat zb(z, bits);
    BigFloat value = s.value.with_precision(bits) * exp(zb) * BigFloat(norm, bits);
    value /= pow(-zb, Rational(static_cast<long>(a.size())));
    report.rows[i] = make_row(z, std::move(value), BigFloat(1L, bits));
  });
  finish(report);
  return report;
}

LimitReport verify_limit_gamma(const Rational& a0, const std::vector<Rational>& a, const std::vector<Rational>& ladder,
                               int digits) {
  if (a0 <= 0) throw DomainError("a_0 must be positive");
  for (const auto& x : a) {
    if (x == 1) throw DomainError("a_j = 1 makes the lower parameter vanish");
  }
  check_ladder(ladder);
  std::vector<Rational> upper{a0};
  std::vector<Rational> lower{a0 + 1};
  for (const auto& x : a) {
    upper.push_back(x);
    lower.push_back(x - 1);
  }
  const HypergeometricSpec spec(upper, lower);
  const mpfr_prec_t bits = bits_for_digits(digits) + 32;

  Rational product(1);
  for (const auto& x : a) product *= (x - a0 - 1) / (x - 1);
  const BigFloat target = gamma(BigFloat(Rational(a0 + 1), bits)) * BigFloat(product, bits);

  LimitReport report;
  report.identity = "limit";
  report.parameters = "a0=" + rational_string(a0) + " a=" + list_string(a);
  report.digits = digits;
  report.rows.resize(ladder.size(), LimitRow{0, BigFloat(bits), BigFloat(bits), BigFloat(bits), BigFloat(bits)});
  parallel_for(ladder.size(), [&](size_t i) {
    const Rational& z = ladder[i];
    SeriesOptions options;
    options.digits = digits + static_cast<int>(std::ceil(a0.get_d() * std::log10(z.get_d()))) + 10;
    const SeriesValue s = eval_pfq(spec, z, options);
    BigFloat value = s.value.with_precision(bits) * pow(BigFloat(z, bits), a0);
    report.rows[i] = make_row(z, std::move(value), target);
  });
  finish(report);
  return report;
}

std::vector<Rational> geometric_ladder(const Rational& z_min, const Rational& z_max, int points) {
  if (points < 2) throw DomainError("ladder needs at least two points");
  if (z_min <= 0 || z_max <= z_min) throw DomainError("ladder needs 0 < z_min < z_max");
  std::vector<Rational> out{z_min};
  const double lo = std::log(z_min.get_d());
  const double hi = std::log(z_max.get_d());
  for (int i = 1; i + 1 < points; ++i) {
    double z = std::exp(lo + (hi - lo) * i / (points - 1));
    Rational r(Integer(static_cast<long>(std::llround(z))));
    if (r <= out.back()) throw DomainError("ladder too dense for integer points");
    out.push_back(r);
  }
  out.push_back(z_max);
  return out;
}

}  // namespace causet::hypergeom
