#include "causet/coefficients.hpp"

#include <string>

#include "causet/errors.hpp"

namespace causet::coefficients {

namespace {

void check_dimension(int d) {
  if (d < 2) throw DomainError("dimension must be >= 2, got " + std::to_string(d));
}

bool even(int d) { return d % 2 == 0; }

// Degree of the layer polynomial, one less than the layer count.
unsigned long layer_degree(int d) { return static_cast<unsigned long>(even(d) ? d / 2 + 1 : (d + 1) / 2); }

}  // namespace

ExactScalar sphere_volume(int k) {
  if (k < 0) throw DomainError("sphere dimension must be >= 0");
  Rational half(k + 1, 2);
  half.canonicalize();
  return ExactScalar(2) * ExactScalar::pi(half) / ExactScalar::gamma(half);
}

ExactScalar volume_constant(int d) {
  check_dimension(d);
  ExactScalar denom = ExactScalar(Rational(d) * (d - 1)) * ExactScalar::power(2, ratio(d, 2) - 1);
  return sphere_volume(d - 2) / denom;
}

ExactScalar alpha(int d) {
  check_dimension(d);
  ExactScalar c_pow = volume_constant(d).pow(ratio(2, d));
  ExactScalar g = ExactScalar::gamma(ratio(d + 2, d));
  return ExactScalar(even(d) ? -2 : -1) * c_pow / g;
}

ExactScalar beta(int d) {
  check_dimension(d);
  ExactScalar c_pow = volume_constant(d).pow(ratio(2, d));
  if (even(d)) {
    ExactScalar num = ExactScalar(2) * ExactScalar::gamma(ratio(d, 2) + 2) * ExactScalar::gamma(ratio(d, 2) + 1);
    ExactScalar den = ExactScalar::gamma(ratio(2, d)) * ExactScalar::gamma(d);
    return num / den * c_pow;
  }
  ExactScalar den = ExactScalar::power(2, d - 1) * ExactScalar::gamma(ratio(2, d) + 1);
  return ExactScalar(d + 1) / den * c_pow;
}

ExactScalar alpha_over_beta(int d) {
  check_dimension(d);
  if (even(d)) {
    const unsigned long h = static_cast<unsigned long>(d / 2);
    Rational r(factorial(static_cast<unsigned long>(d) - 1), factorial(h + 1) * factorial(h - 1));
    r.canonicalize();
    return ExactScalar(-r);
  }
  Rational r(Integer(1) << (d - 1), d + 1);
  r.canonicalize();
  return ExactScalar(-r);
}

int layer_count(int d) {
  check_dimension(d);
  return even(d) ? d / 2 + 2 : (d - 1) / 2 + 2;
}

Rational layer_coefficient(int d, int i) {
  check_dimension(d);
  if (i < 1) throw DomainError("layer index must be >= 1");
  const unsigned long p = layer_degree(d);
  const Rational p_fact(factorial(p));
  Rational sum(0);
  for (int k = 0; k <= i - 1; ++k) {
    Rational x = ratio(d * k, 2) + 1;
    x.canonicalize();
    Rational term = Rational(binomial(static_cast<unsigned long>(i - 1), static_cast<unsigned long>(k))) * rising(x, p) / p_fact;
    if (k % 2 == 1) term = -term;
    sum += term;
  }
  return sum;
}

ExactScalar zeta(int d, const Rational& l_over_lp) {
  check_dimension(d);
  if (l_over_lp <= 0) throw DomainError("l/l_p must be positive");
  return -alpha(d) * ExactScalar::power(l_over_lp, d - 2);
}

CoefficientSet coefficient_set(int d, const Rational& l_over_lp) {
  CoefficientSet out;
  out.dimension = d;
  out.c_d = volume_constant(d);
  out.alpha = alpha(d);
  out.beta = beta(d);
  out.layer_count = layer_count(d);
  for (int i = 1; i <= out.layer_count; ++i) out.layer_coefficients.push_back(layer_coefficient(d, i));
  out.l_over_lp = l_over_lp;
  out.zeta = zeta(d, l_over_lp);
  return out;
}

NumericCoefficients numeric(const CoefficientSet& set) {
  NumericCoefficients out;
  out.dimension = set.dimension;
  out.alpha = set.alpha.to_double();
  out.beta = set.beta.to_double();
  for (const auto& c : set.layer_coefficients) out.layer_coefficients.push_back(c.get_d());
  return out;
}

}  // namespace causet::coefficients
