#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>

#include "causet/dalembertian.hpp"
#include "causet/errors.hpp"

using namespace causet;
using namespace causet::dalembertian;
using causet::sprinkling::make_sprinkle;

namespace {

sprinkling::Sprinkle sampled(int d, double count, std::uint64_t seed) {
  auto spec = sprinkling::spec_for_count(d, 2.0, count);
  auto rng = sprinkling::run_stream(seed, 0);
  return sprinkling::sample_diamond(spec, rng, seed);
}

double at(const FieldSpec& f, std::vector<double> offset) { return f(offset.data()); }

}  // namespace

TEST_CASE("field parser") {
  const auto f = FieldSpec::parse("2*x1^2 - 0.5*t*x1 + 1", 2);
  CHECK(at(f, {1, 2}) == Catch::Approx(2 * 4 - 0.5 * 2 + 1));
  CHECK(at(FieldSpec::parse("x^2", 2), {0, 3}) == Catch::Approx(9));
  CHECK(at(FieldSpec::parse("t^2*x2", 3), {2, 5, 3}) == Catch::Approx(12));
  const auto w = FieldSpec::parse("t^2*window(0.5,1)", 4);
  REQUIRE(w.window());
  CHECK(w.window()->r_in == 0.5);
  CHECK(at(w, {0.3, 0, 0, 0}) == Catch::Approx(0.09));
  CHECK(at(w, {0, 0, 1.2, 0}) == 0);
  const auto round = FieldSpec::parse(f.to_string(), 2);
  CHECK(at(round, {0.7, -1.3}) == Catch::Approx(at(f, {0.7, -1.3})));

  CHECK_THROWS_AS(FieldSpec::parse("t^5", 2), DomainError);
  CHECK_THROWS_AS(FieldSpec::parse("t^2*x1^3", 2), DomainError);
  CHECK_THROWS_AS(FieldSpec::parse("x^2", 3), DomainError);
  CHECK_THROWS_AS(FieldSpec::parse("x3", 3), DomainError);
  CHECK_THROWS_AS(FieldSpec::parse("t*window(0.5,1) + window(0.2,1)", 2), DomainError);
  CHECK_THROWS_AS(FieldSpec::parse("t + ", 2), DomainError);
  CHECK_THROWS_AS(FieldSpec::parse("y^2", 2), DomainError);
}

TEST_CASE("window is a smooth step") {
  const Window w{0.5, 1.0};
  CHECK(w(0.2) == 1);
  CHECK(w(1.5) == 0);
  CHECK(w(0.75) == Catch::Approx(0.5));
  CHECK(w(0.6) + w(0.9) == Catch::Approx(1.0));
}

TEST_CASE("continuum box, mostly plus") {
  CHECK(continuum_dalembertian(FieldSpec::parse("t^2", 2), {0, 0}) == Catch::Approx(-2));
  CHECK(continuum_dalembertian(FieldSpec::parse("x1^2", 2), {0, 0}) == Catch::Approx(2));
  CHECK(continuum_dalembertian(FieldSpec::parse("t^2 - x1^2 - x2^2 - x3^2", 4), {0.1, 0.2, 0, 0}) == Catch::Approx(-8));
  CHECK(continuum_dalembertian(FieldSpec::parse("t^2*x1^2", 3), {0, 0, 0}) == Catch::Approx(0).margin(1e-14));
  CHECK(continuum_dalembertian(FieldSpec::parse("t^2*x1^2", 3), {1, 2, 0}) == Catch::Approx(-2 * 4 + 2 * 1));
  CHECK(continuum_dalembertian(FieldSpec::parse("t^2*window(0.5,1)", 2), {0, 0}) == Catch::Approx(-2));
  CHECK(continuum_dalembertian(FieldSpec::parse("t^2*window(0.5,1)", 2), {0, 3}) == 0);
  CHECK_THROWS_AS(continuum_dalembertian(FieldSpec::parse("t^2*window(0.5,1)", 2), {0, 0.7}), DomainError);
}

TEST_CASE("B on hand-built causets") {
  const auto c2 = coefficients::coefficient_set(2);
  const auto one = FieldSpec::parse("1", 2);
  const auto single = make_sprinkle(2, {{0, 0}}, 0);
  CHECK(apply_b(c2, single, one, 0) == Catch::Approx(-2));
  const auto chain = make_sprinkle(2, {{0, 0}, {1, 0}}, 1);
  CHECK(apply_b(c2, chain, one, 1) == Catch::Approx(2));
  CHECK(apply_b(c2, chain, FieldSpec::parse("t", 2), 1) == Catch::Approx(-4));
  // Three-chain: L_1 = {middle}, L_2 = {bottom}; -2 + 4 (1 - 2).
  const auto chain3 = make_sprinkle(2, {{0, 0}, {1, 0}, {2, 0}}, 2);
  CHECK(apply_b(c2, chain3, one, 2) == Catch::Approx(-6));
  auto dense = chain;
  dense.spec.density = 9;
  CHECK(apply_b(c2, dense, one, 1) == Catch::Approx(18));
  CHECK_THROWS_AS(apply_b(coefficients::coefficient_set(3), chain, one, 1), DomainError);
}

TEST_CASE("B is linear in the field") {
  const auto s = sampled(3, 150, 4);
  const auto c = coefficients::coefficient_set(3);
  const auto f = FieldSpec::parse("t^2 + x1", 3);
  const auto g = FieldSpec::parse("x2^2*t - 3", 3);
  const auto h = FieldSpec::linear_combination(2.0, f, -0.5, g);
  const std::size_t top = *s.top_index;
  CHECK(apply_b(c, s, h, top) == Catch::Approx(2 * apply_b(c, s, f, top) - 0.5 * apply_b(c, s, g, top)));
}

TEST_CASE("layers and histogram against brute force") {
  const auto s = sampled(2, 120, 9);
  const auto m = sprinkling::causal_matrix(s);
  const auto top = *s.top_index;
  const auto layers = layer_populations(m, top, 3);
  std::size_t covered = layers.beyond;
  for (std::size_t i = 0; i < layers.layers.size(); ++i) {
    covered += layers.layers[i].size();
    for (std::size_t y : layers.layers[i]) CHECK(sprinkling::interval_cardinality(m, y, top) == i);
  }
  CHECK(covered == m.past_count(top));

  const auto h = interval_histogram(m, 5);
  std::vector<std::uint64_t> brute(5, 0);
  std::uint64_t over = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (!m.precedes(i, j)) continue;
      const auto n = sprinkling::interval_cardinality(m, i, j);
      if (n < 5) {
        ++brute[n];
      } else {
        ++over;
      }
    }
  }
  CHECK(h.counts == brute);
  CHECK(h.overflow == over);
  const auto hs = interval_histogram_serial(m, 5);
  CHECK(hs.counts == h.counts);
  CHECK(hs.overflow == h.overflow);
  CHECK_THROWS_AS(interval_histogram(m, 0), DomainError);
}

TEST_CASE("action on hand-built causets") {
  const auto c2 = coefficients::coefficient_set(2);
  CHECK(action(c2, 1, {0, 0, 0}) == Catch::Approx(2));
  CHECK(action(c2, 2, {0, 0, 0}) == Catch::Approx(4));
  CHECK(action(c2, 2, {1, 0, 0}) == Catch::Approx(0));
  // 3-chain: N_1 = 2, N_2 = 1; 3 - 2 (2 - 2) = 3.
  CHECK(action_exact(c2, 3, {2, 1, 0}) == ExactScalar(6));
  CHECK_THROWS_AS(action(c2, 2, {1}), DomainError);
  const auto c4 = coefficients::coefficient_set(4);
  CHECK(action_exact(c4, 1, {0, 0, 0, 0}) == c4.zeta);
}

TEST_CASE("action equals the summed operator on a constant field") {
  for (int d = 2; d <= 4; ++d) {
    INFO("d = " << d);
    const auto s = sampled(d, 90, 13);
    const auto m = sprinkling::causal_matrix(s);
    const auto c = coefficients::coefficient_set(d);
    const auto num = coefficients::numeric(c);
    const auto one = FieldSpec::parse("1", d);
    double total = 0;
    for (std::size_t x = 0; x < s.size(); ++x) total += apply_b(num, s, m, one, x);
    const auto h = interval_histogram(m, static_cast<int>(c.layer_coefficients.size()));
    const double a = action(c, s.size(), h.counts);
    const double scale = num.alpha / c.zeta.to_double() * std::pow(s.spec.density, 2.0 / d);
    CHECK(total == Catch::Approx(a * scale).epsilon(1e-10));
  }
}

TEST_CASE("relabeling leaves the action unchanged") {
  const auto s = sampled(3, 100, 2);
  std::vector<std::vector<double>> events;
  for (std::size_t i = 0; i < s.size(); ++i) events.emplace_back(s.event(i), s.event(i) + 3);
  std::reverse(events.begin(), events.end());
  std::rotate(events.begin(), events.begin() + 17, events.end());
  const auto t = make_sprinkle(3, events);
  const auto c = coefficients::coefficient_set(3);
  const auto ha = interval_histogram(sprinkling::causal_matrix(s), 3);
  const auto hb = interval_histogram(sprinkling::causal_matrix(t), 3);
  CHECK(ha.counts == hb.counts);
  CHECK(action_exact(c, s.size(), ha.counts) == action_exact(c, t.size(), hb.counts));
}

TEST_CASE("ensemble is reproducible and validates input") {
  auto spec = sprinkling::spec_for_count(2, 2.0, 60);
  const auto c = coefficients::coefficient_set(2);
  const auto f = FieldSpec::parse("t^2", 2);
  const auto a = ensemble_mean_b(spec, f, c, 12, 5);
  const auto b = ensemble_mean_b(spec, f, c, 12, 5);
  CHECK(a.values == b.values);
  CHECK(a.mean == b.mean);
  CHECK(a.target == Catch::Approx(-2));
  CHECK(a.sizes.size() == 12);
  CHECK(a.mean == Catch::Approx(pairwise_sum(a.values) / 12));
  CHECK_THROWS_AS(ensemble_mean_b(spec, f, c, 1, 5), DomainError);
  CHECK_THROWS_AS(ensemble_mean_b(spec, FieldSpec::parse("t^2*window(0.5,1.5)", 2), c, 4, 5), DomainError);
  spec.include_top_element = false;
  CHECK_THROWS_AS(ensemble_mean_b(spec, f, c, 4, 5), DomainError);
}

TEST_CASE("pairwise sum") {
  CHECK(pairwise_sum({}) == 0);
  CHECK(pairwise_sum({1, 2, 3, 4, 5}) == 15);
  std::vector<double> many(1 << 16, 0.1);
  CHECK(pairwise_sum(many) == Catch::Approx(6553.6).epsilon(1e-13));
}
