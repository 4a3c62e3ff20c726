#include <stdexcept>

#include "causet/coefficients.hpp"
#include "causet/errors.hpp"
#include "causet/hypergeom.hpp"

namespace causet::hypergeom {

namespace {

int od_degree(int d) {
  if (d < 2) throw DomainError("dimension must be >= 2");
  return d % 2 == 0 ? d / 2 + 1 : (d + 1) / 2;
}

std::vector<Rational> exponential_series(int order) {
  std::vector<Rational> out;
  Rational c(1);
  for (int n = 0; n <= order; ++n) {
    if (n > 0) c /= n;
    out.push_back(c);
  }
  return out;
}

// Multiplies a truncated series by e^z and checks that everything from
// `degree_limit` up to the truncation order cancels.
RationalPolynomial times_exp_checked(const std::vector<Rational>& series, int degree_limit) {
  const int order = static_cast<int>(series.size()) - 1;
  const auto e = exponential_series(order);
  std::vector<Rational> product(series.size(), Rational(0));
  for (int k = 0; k <= order; ++k) {
    for (int j = 0; j <= k; ++j) product[static_cast<size_t>(k)] += series[static_cast<size_t>(j)] * e[static_cast<size_t>(k - j)];
  }
  for (int k = degree_limit; k <= order; ++k) {
    if (product[static_cast<size_t>(k)] != 0) throw std::logic_error("exponential product does not truncate");
  }
  return RationalPolynomial(std::move(product)).truncated(degree_limit - 1);
}

}  // namespace

RationalPolynomial od_operator_polynomial(int d) {
  const int p = od_degree(d);
  RationalPolynomial out = RationalPolynomial::constant(1);
  for (int i = 1; i <= p; ++i) {
    out *= RationalPolynomial({Rational(1), Rational(1, 2 * i)});
  }
  return out;
}

RationalPolynomial apply_od_to_exponential(int d, int truncation_order) {
  const int layers = coefficients::layer_count(d);
  if (truncation_order < layers) throw DomainError("truncation order must be at least the layer count");
  const RationalPolynomial od = od_operator_polynomial(d);
  std::vector<Rational> series;
  Rational c(1);
  for (int n = 0; n <= truncation_order; ++n) {
    if (n > 0) c /= -n;
    series.push_back(c * od(Rational(d * n)));
  }
  return times_exp_checked(series, layers);
}

HypergeometricSpec generating_spec(int d) {
  const int p = od_degree(d);
  std::vector<Rational> up;
  std::vector<Rational> low;
  for (int i = 1; i <= p; ++i) {
    Rational r(2 * i, d);
    r.canonicalize();
    up.push_back(r + 1);
    low.push_back(r);
  }
  return HypergeometricSpec(std::move(up), std::move(low));
}

RationalPolynomial generating_polynomial(int d) {
  const int layers = coefficients::layer_count(d);
  const int order = layers + 3;
  const HypergeometricSpec spec = generating_spec(d);
  std::vector<Rational> series;
  Rational t(1);
  for (int n = 0; n <= order; ++n) {
    series.push_back(t);
    Rational ratio(-1, n + 1);
    for (const auto& a : spec.upper()) ratio *= a + n;
    for (const auto& b : spec.lower()) ratio /= b + n;
    t *= ratio;
  }
  return times_exp_checked(series, layers);
}

Rational derivative_at_zero(const RationalPolynomial& poly, int k) {
  if (k < 0) throw DomainError("derivative order must be >= 0");
  return poly.coefficient(k) * Rational(factorial(static_cast<unsigned long>(k)));
}

}  // namespace causet::hypergeom
