#include <catch_amalgamated.hpp>

#include <cmath>
#include <filesystem>
#include <sstream>

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/poisson.hpp>

#include "causet/errors.hpp"
#include "causet/sprinkling.hpp"

using namespace causet;
using namespace causet::sprinkling;

namespace {

std::size_t brute_interval(const Sprinkle& s, std::size_t i, std::size_t j) {
  std::size_t n = 0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (causally_precedes(s.event(i), s.event(k), s.dimension()) &&
        causally_precedes(s.event(k), s.event(j), s.dimension())) {
      ++n;
    }
  }
  return n;
}

Sprinkle small_sprinkle(int d, std::uint64_t seed, double count = 60) {
  auto spec = spec_for_count(d, 2.0, count);
  Rng rng = run_stream(seed, 0);
  return sample_diamond(spec, rng, seed);
}

}  // namespace

TEST_CASE("diamond volumes") {
  CHECK(diamond_volume(2, 2.0) == Catch::Approx(2.0).epsilon(1e-14));
  CHECK(diamond_volume(4, std::sqrt(2.0)) == Catch::Approx(M_PI / 6).epsilon(1e-14));
  CHECK(diamond_volume(3, 2.0) == Catch::Approx(2 * M_PI / 3).epsilon(1e-14));
  CHECK(volume(spec_for_count(3, 1.5, 250)) * spec_for_count(3, 1.5, 250).density == Catch::Approx(250).epsilon(1e-12));
}

TEST_CASE("Poisson counts have the right moments") {
  Rng rng = run_stream(99, 0);
  const int n = 100000;
  double sum = 0;
  double sum2 = 0;
  for (int i = 0; i < n; ++i) {
    const double k = static_cast<double>(poisson_count(5.0, rng));
    sum += k;
    sum2 += k * k;
  }
  const double mean = sum / n;
  const double var = sum2 / n - mean * mean;
  CHECK(std::fabs(mean - 5.0) < 0.05);
  CHECK(std::fabs(var - 5.0) < 0.15);
}

TEST_CASE("sampling is deterministic per stream") {
  const auto a = small_sprinkle(3, 7);
  const auto b = small_sprinkle(3, 7);
  const auto c = small_sprinkle(3, 8);
  CHECK(a.coordinates == b.coordinates);
  CHECK(a.coordinates != c.coordinates);
  Rng r0 = run_stream(7, 0);
  Rng r1 = run_stream(7, 1);
  CHECK(r0() != r1());
}

TEST_CASE("sampled events lie in the diamond, sorted by time, tip last") {
  for (int d = 2; d <= 5; ++d) {
    const auto s = small_sprinkle(d, 11, 200);
    REQUIRE(s.top_index);
    CHECK(*s.top_index == s.size() - 1);
    const double* top = s.event(*s.top_index);
    CHECK(top[0] == Catch::Approx(1.0));
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      const double* p = s.event(i);
      double r2 = 0;
      for (int k = 1; k < d; ++k) r2 += p[k] * p[k];
      CHECK(std::sqrt(r2) + std::fabs(p[0]) < 1.0);
      CHECK(p[0] <= s.event(i + 1)[0]);
    }
  }
}

TEST_CASE("mean element count matches the density") {
  const auto spec = spec_for_count(2, 2.0, 200, false);
  CHECK(spec.density == Catch::Approx(100));
  double total = 0;
  const int runs = 10000;
  for (int r = 0; r < runs; ++r) {
    Rng rng = run_stream(3, static_cast<std::uint64_t>(r));
    total += static_cast<double>(sample_diamond(spec, rng).size());
  }
  CHECK(std::fabs(total / runs - 200.0) < 5 * std::sqrt(200.0 / runs));
}

TEST_CASE("sub-diamond counts are Poisson") {
  // Sub-diamond with tips (-0.5, 0) and (0.5, 0): volume 1/2, mean 2.5.
  DiamondSpec spec;
  spec.dimension = 2;
  spec.tau = 2;
  spec.density = 5;
  spec.include_top_element = false;
  const double mean = 2.5;
  const int runs = 10000;
  const int bins = 8;  // 0..6 and 7+
  std::vector<double> observed(bins, 0);
  for (int r = 0; r < runs; ++r) {
    Rng rng = run_stream(123, static_cast<std::uint64_t>(r));
    const auto s = sample_diamond(spec, rng);
    int k = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      const double* p = s.event(i);
      k += std::fabs(p[0]) + std::fabs(p[1]) < 0.5;
    }
    observed[static_cast<std::size_t>(std::min(k, bins - 1))] += 1;
  }
  const boost::math::poisson_distribution<double> poisson(mean);
  double chi2 = 0;
  for (int k = 0; k < bins; ++k) {
    const double p = k < bins - 1 ? boost::math::pdf(poisson, k) : boost::math::cdf(boost::math::complement(poisson, k - 1));
    const double expected = p * runs;
    chi2 += (observed[static_cast<std::size_t>(k)] - expected) * (observed[static_cast<std::size_t>(k)] - expected) / expected;
  }
  const boost::math::chi_squared_distribution<double> dist(bins - 1);
  INFO("chi2 = " << chi2);
  CHECK(boost::math::cdf(boost::math::complement(dist, chi2)) > 0.01);
}

TEST_CASE("chain and antichain") {
  const auto chain = make_sprinkle(2, {{0, 0}, {1, 0}, {2, 0}, {3, 0}});
  const auto m = causal_matrix(chain);
  CHECK(m.relation_count() == 6);
  CHECK(interval_cardinality(m, 0, 3) == 2);
  CHECK(interval_cardinality(m, 1, 2) == 0);
  const auto anti = make_sprinkle(2, {{0, 0}, {0, 1}, {0.5, 3}});
  const auto ma = causal_matrix(anti);
  CHECK(ma.relation_count() == 0);
  CHECK_THROWS_AS(interval_cardinality(ma, 0, 1), DomainError);
  // Null separation is not a relation.
  CHECK_FALSE(causally_precedes(std::vector<double>{0, 0}, std::vector<double>{1, 1}));
}

TEST_CASE("matrix and intervals against brute force") {
  for (int d = 2; d <= 4; ++d) {
    const auto s = small_sprinkle(d, 21, 80);
    const auto m = causal_matrix(s);
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = 0; j < s.size(); ++j) {
        const bool rel = causally_precedes(s.event(i), s.event(j), d);
        REQUIRE(m.precedes(i, j) == rel);
        CHECK(((m.past_row(j)[i / 64] >> (i % 64)) & 1U) == (rel ? 1U : 0U));
        if (rel) CHECK(interval_cardinality(m, i, j) == brute_interval(s, i, j));
      }
    }
  }
}

TEST_CASE("order is transitive and acyclic") {
  const auto s = small_sprinkle(3, 5, 120);
  const auto m = causal_matrix(s);
  for (std::size_t i = 0; i < s.size(); ++i) {
    CHECK_FALSE(m.precedes(i, i));
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (!m.precedes(i, j)) continue;
      CHECK(i < j);
      for (std::size_t k = 0; k < s.size(); ++k) {
        if (m.precedes(j, k)) CHECK(m.precedes(i, k));
      }
    }
  }
}

TEST_CASE("relations are boost invariant") {
  const auto s = small_sprinkle(2, 17, 100);
  const double eta = 0.7;
  std::vector<std::vector<double>> boosted;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double* p = s.event(i);
    boosted.push_back({std::cosh(eta) * p[0] + std::sinh(eta) * p[1], std::sinh(eta) * p[0] + std::cosh(eta) * p[1]});
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < s.size(); ++j) {
      const std::vector<double> a(s.event(i), s.event(i) + 2);
      const std::vector<double> b(s.event(j), s.event(j) + 2);
      CHECK(causally_precedes(a, b) == causally_precedes(boosted[i], boosted[j]));
    }
  }
}

TEST_CASE("serial and parallel matrices agree") {
  for (int d : {2, 4}) {
    const auto s = small_sprinkle(d, 31, 700);
    CHECK(causal_matrix(s) == causal_matrix_serial(s));
  }
}

TEST_CASE("json and binary round trips") {
  const auto s = small_sprinkle(4, 41, 50);
  for (auto format : {SprinkleFormat::json, SprinkleFormat::binary}) {
    std::stringstream buf;
    write_sprinkle(buf, s, format);
    const auto back = read_sprinkle(buf);
    CHECK(back.coordinates == s.coordinates);
    CHECK(back.top_index == s.top_index);
    CHECK(back.seed == s.seed);
    CHECK(back.spec.dimension == 4);
    CHECK(back.spec.tau == s.spec.tau);
    CHECK(back.spec.density == s.spec.density);
  }
  const auto path = std::filesystem::temp_directory_path() / "causet_roundtrip.cset";
  save_sprinkle(path.string(), s, SprinkleFormat::binary);
  CHECK(load_sprinkle(path.string()).coordinates == s.coordinates);
  std::filesystem::remove(path);
  std::stringstream junk("not a sprinkle");
  CHECK_THROWS(read_sprinkle(junk));
}

TEST_CASE("spec validation") {
  DiamondSpec bad;
  bad.tau = -1;
  CHECK_THROWS_AS(validate(bad), DomainError);
  bad = DiamondSpec{};
  bad.dimension = 1;
  CHECK_THROWS_AS(validate(bad), DomainError);
  bad = DiamondSpec{};
  bad.density = 0;
  CHECK_THROWS_AS(validate(bad), DomainError);
}
