#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <boost/random/poisson_distribution.hpp>
#include <boost/random/uniform_real_distribution.hpp>

#include "causet/coefficients.hpp"
#include "causet/errors.hpp"
#include "causet/sprinkling.hpp"

namespace causet::sprinkling {

namespace {

void sort_by_time(std::vector<double>& coords, int d, std::optional<std::size_t>& top_index) {
  const std::size_t n = coords.size() / static_cast<std::size_t>(d);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(coords.begin() + a * d, coords.begin() + (a + 1) * d, coords.begin() + b * d,
                                        coords.begin() + (b + 1) * d);
  });
  std::vector<double> sorted;
  sorted.reserve(coords.size());
  std::optional<std::size_t> new_top;
  for (std::size_t k = 0; k < n; ++k) {
    if (top_index && order[k] == *top_index) new_top = k;
    sorted.insert(sorted.end(), coords.begin() + order[k] * d, coords.begin() + (order[k] + 1) * d);
  }
  coords = std::move(sorted);
  top_index = new_top;
}

}  // namespace

Rng run_stream(std::uint64_t master_seed, std::uint64_t run) {
  std::seed_seq seq{static_cast<std::uint32_t>(master_seed), static_cast<std::uint32_t>(master_seed >> 32),
                    static_cast<std::uint32_t>(run), static_cast<std::uint32_t>(run >> 32)};
  return Rng(seq);
}

double diamond_volume(int d, double tau) {
  if (d < 2) throw DomainError("dimension must be >= 2");
  if (!(tau >= 0) || !std::isfinite(tau)) throw DomainError("tau must be finite and >= 0");
  const double c = coefficients::volume_constant(d).to_double();
  return c * std::pow(tau * tau / 2, d / 2.0);
}

double volume(const DiamondSpec& spec) { return diamond_volume(spec.dimension, spec.tau); }

void validate(const DiamondSpec& spec) {
  if (spec.dimension < 2) throw DomainError("dimension must be >= 2");
  if (!(spec.tau > 0) || !std::isfinite(spec.tau)) throw DomainError("tau must be positive");
  if (!(spec.density > 0) || !std::isfinite(spec.density)) throw DomainError("density must be positive");
}

DiamondSpec spec_for_count(int d, double tau, double expected_count, bool include_top_element) {
  if (!(expected_count > 0)) throw DomainError("expected count must be positive");
  DiamondSpec spec;
  spec.dimension = d;
  spec.tau = tau;
  spec.density = expected_count / diamond_volume(d, tau);
  spec.include_top_element = include_top_element;
  validate(spec);
  return spec;
}

std::uint64_t poisson_count(double mean, Rng& rng) {
  if (!(mean > 0) || !std::isfinite(mean)) throw DomainError("Poisson mean must be positive and finite");
  boost::random::poisson_distribution<std::uint64_t, double> dist(mean);
  return dist(rng);
}

bool causally_precedes(const double* x, const double* y, int d) {
  const double dt = y[0] - x[0];
  if (dt <= 0) return false;
  double r2 = 0;
  for (int k = 1; k < d; ++k) {
    const double dx = y[k] - x[k];
    r2 += dx * dx;
  }
  return dt * dt > r2;
}

bool causally_precedes(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.empty()) throw DomainError("events of different dimension");
  return causally_precedes(x.data(), y.data(), static_cast<int>(x.size()));
}

void sort_events(Sprinkle& sprinkle) { sort_by_time(sprinkle.coordinates, sprinkle.dimension(), sprinkle.top_index); }

Sprinkle make_sprinkle(int d, const std::vector<std::vector<double>>& events, std::optional<std::size_t> top_index) {
  if (d < 2) throw DomainError("dimension must be >= 2");
  if (top_index && *top_index >= events.size()) throw DomainError("top index out of range");
  Sprinkle s;
  s.spec.dimension = d;
  s.spec.include_top_element = top_index.has_value();
  for (const auto& e : events) {
    if (static_cast<int>(e.size()) != d) throw DomainError("event has wrong dimension");
    s.coordinates.insert(s.coordinates.end(), e.begin(), e.end());
  }
  s.top_index = top_index;
  sort_by_time(s.coordinates, d, s.top_index);
  return s;
}

Sprinkle sample_diamond(const DiamondSpec& spec, Rng& rng, std::uint64_t seed) {
  validate(spec);
  const int d = spec.dimension;
  const double half = spec.tau / 2;
  const double vol = volume(spec);
  const double acceptance = vol / std::pow(spec.tau, d);
  if (acceptance < spec.min_acceptance) throw DomainError("rejection acceptance below the configured floor");

  const std::uint64_t n = poisson_count(spec.density * vol, rng);
  Sprinkle s;
  s.spec = spec;
  s.seed = seed;
  s.coordinates.reserve((n + 1) * static_cast<std::size_t>(d));

  std::vector<double> past_tip(d, 0.0);
  std::vector<double> future_tip(d, 0.0);
  past_tip[0] = -half;
  future_tip[0] = half;
  boost::random::uniform_real_distribution<double> uniform(-half, half);
  std::vector<double> p(d);
  for (std::uint64_t k = 0; k < n;) {
    for (int c = 0; c < d; ++c) p[c] = uniform(rng);
    if (causally_precedes(past_tip.data(), p.data(), d) && causally_precedes(p.data(), future_tip.data(), d)) {
      s.coordinates.insert(s.coordinates.end(), p.begin(), p.end());
      ++k;
    }
  }
  std::optional<std::size_t> top;
  sort_by_time(s.coordinates, d, top);
  if (spec.include_top_element) {
    s.top_index = s.size();
    s.coordinates.insert(s.coordinates.end(), future_tip.begin(), future_tip.end());
  }
  return s;
}

}  // namespace causet::sprinkling
