#include <catch_amalgamated.hpp>

#include <cmath>

#include "causet/coefficients.hpp"
#include "causet/continuum.hpp"
#include "causet/errors.hpp"

using namespace causet;
using namespace causet::continuum;

namespace {

// Reference values from an independent mpmath evaluation (60+ digits).
double rel_to(const BigFloat& v, const std::string& ref) {
  const BigFloat r(parse_rational(ref), v.precision());
  return (abs(v - r) / abs(r)).to_double();
}

double value_at(const ConvergenceReport& r, size_t i) { return r.values.at(i).to_double(); }

}  // namespace

TEST_CASE("beta expansion against mpmath") {
  const auto r3 = check_beta(3, {10, 1000}, 30);
  CHECK(rel_to(r3.values[1], "0.9206038401261080372766366") < 1e-22);
  const auto r4 = check_beta(4, {10, 100}, 30);
  CHECK(rel_to(r4.values[1], "0.483360362442697250711463") < 1e-22);
  const auto r5 = check_beta(5, {10, 10000}, 30);
  CHECK(rel_to(r5.values[1], "2.546277021106927821596952") < 1e-22);
}

TEST_CASE("alpha/beta expansion against mpmath") {
  const auto r5 = check_alpha_over_beta(5, {10, 10000}, 30);
  CHECK(rel_to(r5.values[1], "2.657180936865305541995498") < 1e-22);
  const auto r6 = check_alpha_over_beta(6, {10, 100}, 30);
  CHECK(rel_to(r6.values[1], "2.395245688216061241803431") < 1e-22);
  const auto r3 = check_alpha_over_beta(3, {10, 100}, 30);
  CHECK(rel_to(r3.values[0], "0.9999546000702375151484644") < 1e-22);
}

TEST_CASE("Ricci sector against mpmath with numerical l d/dl") {
  CHECK(rel_to(evaluate(assemble_ricci_r(2), 100, 128), "-0.49") < 1e-25);
  CHECK(rel_to(evaluate(assemble_ricci_r(3), 1000, 128), "-0.4131827584813594597011307") < 1e-22);
  CHECK(rel_to(evaluate(assemble_ricci_00(3), 1000, 128), "0.02413552883699416075716656") < 1e-22);
  CHECK(rel_to(evaluate(assemble_ricci_00(4), 100, 128), "0.07531538892891450689697483") < 1e-22);
  CHECK(rel_to(evaluate(assemble_ricci_r(4), 100, 128), "-0.3871395555098119921177431") < 1e-22);
}

TEST_CASE("T1 from two independent constructions") {
  for (int d = 2; d <= 7; ++d) {
    INFO("d = " << d);
    const auto a = build_ricci_expansions(d).t1;
    const auto b = build_t1_independent(d);
    for (long z : {3L, 40L, 500L}) {
      const double va = evaluate(a, z, 160).to_double();
      const double vb = evaluate(b, z, 160).to_double();
      CHECK(va == Catch::Approx(vb).epsilon(1e-14));
    }
  }
}

TEST_CASE("asymptotic limits equal the closed forms") {
  for (int d = 2; d <= 7; ++d) {
    INFO("d = " << d);
    const double inv_beta = 1.0 / coefficients::beta(d).to_double();
    const auto beta_exp = scaled(build_beta_expansion(d), coefficients::sphere_volume(d - 2) / ExactScalar(2 * (d - 1)));
    CHECK(asymptotics(beta_exp, 128).limit.to_double() == Catch::Approx(inv_beta).epsilon(1e-14));
    const auto ab_exp = scaled(build_alpha_beta_expansion(d), coefficients::sphere_volume(d - 2));
    CHECK(asymptotics(ab_exp, 128).limit.to_double() ==
          Catch::Approx(-coefficients::alpha_over_beta(d).to_double()).epsilon(1e-14));
    const auto ir = asymptotics(assemble_ricci_r(d), 128);
    CHECK(ir.bounded);
    CHECK(ir.limit.to_double() == Catch::Approx(-0.5).epsilon(1e-14));
    CHECK(std::fabs(asymptotics(assemble_ricci_00(d), 128).limit.to_double()) < 1e-30);
  }
}

TEST_CASE("d = 2 convergence") {
  const auto b = check_beta(2, {10, 100, 1000}, 30);
  CHECK(b.target.to_double() == Catch::Approx(0.25).epsilon(1e-15));
  CHECK(std::fabs(value_at(b, 2) - 0.25) < 0.0025);
  CHECK(b.monotone);
  const auto ric = check_ricci(2, default_ladder(2), 30);
  CHECK(std::fabs(value_at(ric.i_r, 3) + 0.5) < 1e-3);
  CHECK(std::fabs(value_at(ric.i_00, 3)) < 1e-3);
  CHECK(ric.i_r.monotone);
  CHECK(ric.i_00.monotone);
}

TEST_CASE("alpha/beta targets") {
  CHECK(check_alpha_over_beta(2, {10, 100}, 30).target.to_double() == Catch::Approx(0.5).epsilon(1e-15));
  CHECK(check_alpha_over_beta(4, {10, 100}, 30).target.to_double() == Catch::Approx(1.0).epsilon(1e-15));
  CHECK(check_alpha_over_beta(5, {10, 100}, 30).target.to_double() == Catch::Approx(8.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("l d/dl shifts parameters and raises the power of z") {
  const auto e = build_beta_expansion(4);
  const auto s = apply_l_dl(e);
  REQUIRE(s.terms.size() == e.terms.size());
  for (size_t i = 0; i < e.terms.size(); ++i) {
    CHECK(s.terms[i].z_power == e.terms[i].z_power + 1);
    CHECK(s.terms[i].spec == e.terms[i].spec.shifted());
  }
  // l d/dl = -d z d/dz on F(-z); compare against a central difference.
  const Rational z = 7;
  const auto& t = e.terms[1];
  KSumExpansion only = e;
  only.terms = {t};
  only.terms[0].z_power = 0;
  KSumExpansion shifted = apply_l_dl(only);
  shifted.terms[0].z_power = 0;
  const double h = 1e-6;
  const double fp = evaluate(only, z + Rational(1, 1000000), 128).to_double();
  const double fm = evaluate(only, z - Rational(1, 1000000), 128).to_double();
  const double dz = (fp - fm) / (2 * h);
  CHECK(evaluate(shifted, z, 128).to_double() == Catch::Approx(-4 * dz).epsilon(1e-6));
}

TEST_CASE("default ladder") {
  CHECK(default_ladder(2) == std::vector<Rational>{10, 100, 1000, 10000});
  CHECK(default_ladder(4).back() == 1000000);
  CHECK(default_ladder(3).back() == 10000000);
  CHECK(default_ladder(6).back() == parse_rational("1e12"));
  CHECK(default_ladder(5).size() == 4);
}

TEST_CASE("limit parameter sets") {
  size_t flat = 0;
  size_t gamma = 0;
  for (int d = 2; d <= 7; ++d) {
    const auto s = limit_parameter_sets(d);
    flat += s.flat.size();
    gamma += s.gamma.size();
    for (const auto& [a0, a] : s.gamma) {
      for (const auto& aj : a) CHECK(aj != a0 + 1);
    }
  }
  CHECK(flat > 0);
  CHECK(flat + gamma >= 20);
  const auto s5 = limit_parameter_sets(5);
  REQUIRE_FALSE(s5.flat.empty());
  const auto r = hypergeom::verify_limit_flat(s5.flat.front(), hypergeom::geometric_ladder(10, 10000, 4), 40);
  CHECK(r.final_rel_error < 1e-2);
}

TEST_CASE("ricci expansion shapes") {
  for (int d = 2; d <= 5; ++d) {
    const auto r = build_ricci_expansions(d);
    CHECK(r.t1.terms.size() == static_cast<size_t>(d + 1));
    CHECK_FALSE(r.t2.terms.empty());
    CHECK_FALSE(r.t3.terms.empty());
  }
  CHECK_THROWS_AS(build_beta_expansion(1), DomainError);
}
