#include <catch_amalgamated.hpp>

#include <cmath>

#include "causet/continuum.hpp"
#include "causet/errors.hpp"
#include "causet/hypergeom.hpp"

using namespace causet;
using namespace causet::hypergeom;

namespace {

double rel_diff(const BigFloat& a, const std::string& b) {
  const BigFloat ref(parse_rational(b), a.precision());
  return (abs(a - ref) / abs(ref)).to_double();
}

}  // namespace

TEST_CASE("series values against mpmath") {
  struct Case {
    HypergeometricSpec spec;
    Rational z;
    std::string value;
  };
  const std::vector<Case> cases{
      {HypergeometricSpec({ratio(3, 2), 3}, {ratio(1, 2), 2}), 1, "-0.5518191617571634823932857"},
      {HypergeometricSpec({ratio(1, 3), ratio(5, 3)}, {ratio(4, 3), ratio(2, 3)}), 40, "0.130554396584457299314334607177"},
      {HypergeometricSpec({ratio(2, 5), ratio(7, 5), ratio(9, 5)}, {ratio(7, 5), ratio(4, 5), ratio(12, 5)}), 120,
       "0.0919696163345772182908984848664"},
      {HypergeometricSpec({ratio(1, 2)}, {ratio(3, 2), ratio(5, 2)}), 30, "0.217312825075224477504109811626"},
      {HypergeometricSpec({ratio(3, 4), ratio(5, 4)}, {ratio(7, 4)}), ratio(1, 2), "0.80110444407815785268614288614064"},
  };
  for (const auto& c : cases) {
    INFO(c.spec.to_string() << " at -" << rational_string(c.z));
    SeriesOptions opt;
    opt.digits = 28;
    const SeriesValue v = eval_pfq(c.spec, c.z, opt);
    CHECK(rel_diff(v.value, c.value) < 1e-24);
    CHECK(rel_diff(evaluate(c.spec, c.z, 128), c.value) < 1e-24);
  }
}

TEST_CASE("e^-z from 0F0") {
  SeriesOptions opt;
  opt.digits = 30;
  const auto v = eval_pfq(HypergeometricSpec({}, {}), 1, opt);
  CHECK(v.value.to_double() == Catch::Approx(std::exp(-1.0)).epsilon(1e-15));
}

TEST_CASE("exact and big-float backends agree on expansion parameters") {
  for (int d = 2; d <= 7; ++d) {
    for (const auto& e : {continuum::build_beta_expansion(d), continuum::build_alpha_beta_expansion(d)}) {
      for (const auto& term : e.terms) {
        for (long z : {10L, 50L}) {
          SeriesOptions exact;
          exact.digits = 40;
          exact.backend = Backend::exact_rational;
          SeriesOptions big = exact;
          big.backend = Backend::big_float;
          const auto a = eval_pfq(term.spec, z, exact);
          const auto b = eval_pfq(term.spec, z, big);
          INFO(term.spec.to_string() << " z=" << z);
          CHECK(a.backend == Backend::exact_rational);
          CHECK(b.backend == Backend::big_float);
          const double scale = std::max(1.0, std::fabs(a.value.to_double()));
          CHECK(abs(a.value - b.value).to_double() <= 1e-38 * scale);
        }
      }
    }
  }
}

TEST_CASE("tail bound is sound when the threshold is halved") {
  const HypergeometricSpec spec({ratio(2, 3), ratio(5, 3)}, {ratio(5, 3), ratio(2, 3) + 1});
  for (long z : {5L, 40L, 200L}) {
    SeriesOptions a;
    a.digits = 25;
    SeriesOptions b = a;
    b.threshold_scale = ratio(1, 2);
    const auto va = eval_pfq(spec, z, a);
    const auto vb = eval_pfq(spec, z, b);
    CHECK(abs(va.value - vb.value) <= va.tail_bound + va.rounding_bound);
  }
}

TEST_CASE("spec validation and reduction") {
  CHECK_THROWS_AS(HypergeometricSpec({1}, {0}), DomainError);
  CHECK_THROWS_AS(HypergeometricSpec({1}, {-2}), DomainError);
  const HypergeometricSpec s({ratio(1, 2), 2, 3}, {2, ratio(3, 2)});
  CHECK(s.reduced() == HypergeometricSpec({ratio(1, 2), 3}, {ratio(3, 2)}));
  CHECK(s.shifted() == HypergeometricSpec({ratio(3, 2), 3, 4}, {3, ratio(5, 2)}));
  CHECK(s.derivative_factor() == 1);
  CHECK_THROWS_AS(eval_pfq(HypergeometricSpec({1, 1, 1}, {2}), 1), DomainError);
  SeriesOptions low;
  low.digits = 5;
  CHECK_THROWS_AS(eval_pfq(HypergeometricSpec({1}, {2}), 1, low), DomainError);
}

TEST_CASE("closed form matches the series") {
  const HypergeometricSpec spec({ratio(2, 3), ratio(5, 3), 3}, {ratio(5, 3), 2, ratio(2, 3) + 1});
  const auto cf = ClosedForm::build(spec);
  REQUIRE(cf);
  SeriesOptions opt;
  opt.digits = 40;
  const auto series = eval_pfq(spec, 40, opt);
  CHECK(abs(cf->evaluate(40, 160) - series.value).to_double() < 1e-30);
  CHECK(cf->leading_decay() == ratio(2, 3));
  CHECK_FALSE(ClosedForm::build(HypergeometricSpec({ratio(1, 3)}, {ratio(1, 2)})));
}

TEST_CASE("O^(d) on the exponential") {
  CHECK(apply_od_to_exponential(3, 10) == RationalPolynomial({1, ratio(-27, 8), ratio(9, 8)}));
  CHECK(apply_od_to_exponential(2, 12) == RationalPolynomial({1, -2, ratio(1, 2)}));
  CHECK_THROWS_AS(apply_od_to_exponential(4, 2), DomainError);
  const auto op = od_operator_polynomial(2);
  CHECK(op == RationalPolynomial({1, ratio(1, 2)}) * RationalPolynomial({1, ratio(1, 4)}));
  CHECK_THROWS_AS(eval_pfq(HypergeometricSpec({ratio(3, 4), ratio(5, 4)}, {ratio(7, 4)}), ratio(7, 2)), DomainError);
}

TEST_CASE("generating polynomial") {
  const auto g2 = generating_polynomial(2);
  CHECK(g2 == RationalPolynomial({1, -2, ratio(1, 2)}));
  for (int d = 2; d <= 8; ++d) {
    const auto g = generating_polynomial(d);
    const int nd = d % 2 == 0 ? d / 2 + 2 : (d - 1) / 2 + 2;
    CHECK(g.degree() == nd - 1);
    CHECK(g(Rational(0)) == 1);
  }
  CHECK(derivative_at_zero(g2, 1) == -2);
  CHECK(derivative_at_zero(g2, 2) == 1);
}

TEST_CASE("flat limit converges like 1/z") {
  const auto ladder = geometric_ladder(10, 10000, 4);
  const auto r = verify_limit_flat({3}, ladder, 40);
  CHECK(r.monotone);
  CHECK(r.final_rel_error < 1e-3);
  CHECK(r.fitted_exponent == Catch::Approx(1.0).margin(0.05));
  const auto r2 = verify_limit_flat({ratio(5, 3), ratio(7, 3)}, ladder, 40);
  CHECK(r2.monotone);
  CHECK(r2.fitted_exponent == Catch::Approx(1.0).margin(0.05));
  CHECK_THROWS_AS(verify_limit_flat({1}, ladder, 40), DomainError);
}

TEST_CASE("gamma limit reaches 3 sqrt(pi)/8") {
  const auto r = verify_limit_gamma(ratio(1, 2), {3}, geometric_ladder(10, 10000, 4), 40);
  CHECK(r.rows.back().target.to_double() == Catch::Approx(3 * std::sqrt(M_PI) / 8).epsilon(1e-14));
  CHECK(r.final_rel_error < 1e-20);
  CHECK(r.monotone);
}

TEST_CASE("geometric ladder") {
  const auto l = geometric_ladder(10, 10000, 4);
  CHECK(l == std::vector<Rational>{10, 100, 1000, 10000});
  CHECK_THROWS_AS(geometric_ladder(10, 5, 4), DomainError);
}
