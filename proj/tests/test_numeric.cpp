#include <catch_amalgamated.hpp>

#include <cmath>

#include "causet/bigfloat.hpp"
#include "causet/convergence.hpp"
#include "causet/errors.hpp"
#include "causet/exact_scalar.hpp"
#include "causet/polynomial.hpp"

using namespace causet;

TEST_CASE("parse_rational accepts fractions, decimals and exponents") {
  CHECK(parse_rational("3/6") == ratio(1, 2));
  CHECK(parse_rational("-0.25") == ratio(-1, 4));
  CHECK(parse_rational("1e3") == Rational(1000));
  CHECK(parse_rational("2.5e-1") == ratio(1, 4));
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
  CHECK_THROWS_AS(parse_rational("abc"), DomainError);
}

TEST_CASE("gamma atoms reduce to the unit interval") {
  CHECK(ExactScalar::gamma(5) == ExactScalar(24));
  CHECK(ExactScalar::gamma(ratio(1, 2)) == ExactScalar::pi(ratio(1, 2)));
  CHECK(ExactScalar::gamma(ratio(5, 2)) == ExactScalar(ratio(3, 4)) * ExactScalar::pi(ratio(1, 2)));
  CHECK(ExactScalar::gamma(ratio(7, 3)) == ExactScalar(ratio(4, 9)) * ExactScalar::gamma(ratio(1, 3)));
  CHECK(ExactScalar::gamma(ratio(-1, 2)) == ExactScalar(-2) * ExactScalar::pi(ratio(1, 2)));
  CHECK_THROWS_AS(ExactScalar::gamma(0), DomainError);
  CHECK_THROWS_AS(ExactScalar::gamma(-3), DomainError);
}

TEST_CASE("radicals normalise their exponents") {
  const ExactScalar r = ExactScalar::power(8, ratio(1, 2));
  CHECK(r == ExactScalar(2) * ExactScalar::power(2, ratio(1, 2)));
  CHECK(r.pow(2) == ExactScalar(8));
  CHECK((ExactScalar::power(6, ratio(1, 2)) * ExactScalar::power(6, ratio(1, 2))).is_rational());
  CHECK(ExactScalar::power(ratio(4, 9), ratio(1, 2)) == ExactScalar(ratio(2, 3)));
}

TEST_CASE("exact scalar renders and evaluates") {
  const ExactScalar x = ExactScalar(ratio(-2, 3)) * ExactScalar::power(6, ratio(1, 2));
  CHECK(x.exact_string() == "-2/3*2^(1/2)*3^(1/2)");
  CHECK(x.to_double() == Catch::Approx(-2.0 / 3.0 * std::sqrt(6.0)).epsilon(1e-15));
  CHECK(ExactScalar::pi().decimal(20) == "3.1415926535897932385");
  const std::string d50 = ExactScalar::gamma(ratio(1, 3)).decimal(50);
  const std::string d100 = ExactScalar::gamma(ratio(1, 3)).decimal(100);
  CHECK(d50.substr(0, 48) == d100.substr(0, 48));
}

TEST_CASE("BigFloat keeps per-object precision") {
  BigFloat a(Rational(1, 3), 64);
  BigFloat b(Rational(1, 3), 256);
  CHECK(a.precision() == 64);
  CHECK(b.precision() == 256);
  BigFloat c = a + b;
  CHECK(c.precision() == 256);
  CHECK(exp(BigFloat(1L, 128)).to_double() == Catch::Approx(std::exp(1.0)).epsilon(1e-15));
  CHECK(pow(BigFloat(8L, 128), ratio(1, 3)).to_double() == Catch::Approx(2.0).epsilon(1e-15));
  CHECK_THROWS_AS(pow(BigFloat(-8L, 128), ratio(1, 2)), DomainError);
  CHECK(gamma(BigFloat(Rational(1, 2), 128)).to_double() == Catch::Approx(std::sqrt(M_PI)).epsilon(1e-15));
}

TEST_CASE("rational polynomial arithmetic") {
  const RationalPolynomial p = RationalPolynomial::linear_root(1) * RationalPolynomial::linear_root(-1);
  CHECK(p.degree() == 2);
  CHECK(p(Rational(3)) == Rational(8));
  auto [q, r] = p.divmod(RationalPolynomial::linear_root(1));
  CHECK(q == RationalPolynomial::linear_root(-1));
  CHECK(r.is_zero());
  CHECK(RationalPolynomial().degree() == -1);
}

TEST_CASE("decay exponent fit and monotonicity") {
  const std::vector<double> z{10, 100, 1000, 10000};
  const std::vector<double> err{0.5, 0.1, 0.01, 0.001};
  CHECK(fitted_decay_exponent(z, err, 1e-30) == Catch::Approx(1.0).margin(1e-12));
  CHECK(monotone_decreasing(err, 1e-30));
  CHECK_FALSE(monotone_decreasing({0.5, 0.1, 0.2, 0.01}, 1e-30));
  CHECK(monotone_decreasing({0.3, 0.1, 1e-40, 1e-41}, 1e-30));
  CHECK(std::isinf(fitted_decay_exponent(z, {0.1, 1e-40, 1e-41, 1e-42}, 1e-30)));
}
