#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <boost/random/mersenne_twister.hpp>

namespace causet::sprinkling {

using Rng = boost::random::mt19937_64;

/// Stream for run `run` under `master_seed`; distinct runs never share state.
Rng run_stream(std::uint64_t master_seed, std::uint64_t run);

/// Causal diamond with tips at t = -tau/2 and t = +tau/2 on the spatial origin.
struct DiamondSpec {
  int dimension = 2;
  double tau = 1;
  double density = 1;
  bool include_top_element = true;
  /// Sampling stops with an error if box rejection would accept less than this.
  double min_acceptance = 1e-3;
};

/// c_d (tau^2/2)^(d/2).
double diamond_volume(int d, double tau);
double volume(const DiamondSpec& spec);
/// Spec whose density gives `expected_count` elements on average.
DiamondSpec spec_for_count(int d, double tau, double expected_count, bool include_top_element = true);
void validate(const DiamondSpec& spec);

std::uint64_t poisson_count(double mean, Rng& rng);

/// Events stored row-major as (t, x_1..x_{d-1}), sorted by t.
struct Sprinkle {
  DiamondSpec spec;
  std::uint64_t seed = 0;
  std::vector<double> coordinates;
  std::optional<std::size_t> top_index;

  int dimension() const { return spec.dimension; }
  std::size_t size() const { return coordinates.size() / static_cast<std::size_t>(spec.dimension); }
  const double* event(std::size_t i) const { return coordinates.data() + i * static_cast<std::size_t>(spec.dimension); }
};

/// Builds a sprinkle from explicit events (sorted on the way in).
Sprinkle make_sprinkle(int d, const std::vector<std::vector<double>>& events,
                       std::optional<std::size_t> top_index = std::nullopt);

/// Restores t-ascending storage order, keeping top_index on the same event.
void sort_events(Sprinkle& sprinkle);

Sprinkle sample_diamond(const DiamondSpec& spec, Rng& rng, std::uint64_t seed = 0);

/// t_y - t_x > |x_y - x_x|.
bool causally_precedes(const double* x, const double* y, int d);
bool causally_precedes(const std::vector<double>& x, const std::vector<double>& y);

/// Packed strict order over t-sorted indices.
class CausalMatrix {
 public:
  CausalMatrix() = default;
  explicit CausalMatrix(std::size_t n);

  std::size_t size() const { return n_; }
  std::size_t words() const { return words_; }
  const std::uint64_t* future_row(std::size_t i) const { return future_.data() + i * words_; }
  const std::uint64_t* past_row(std::size_t i) const { return past_.data() + i * words_; }
  bool precedes(std::size_t i, std::size_t j) const { return (future_row(i)[j / 64] >> (j % 64)) & 1U; }
  std::size_t future_count(std::size_t i) const;
  std::size_t past_count(std::size_t i) const;
  std::size_t relation_count() const;

  void set(std::size_t i, std::size_t j);
  /// Rebuilds past rows as the transpose of the future rows.
  void rebuild_past(bool parallel = true);

  bool operator==(const CausalMatrix& other) const;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> future_;
  std::vector<std::uint64_t> past_;
};

CausalMatrix causal_matrix(const Sprinkle& sprinkle);
CausalMatrix causal_matrix_serial(const Sprinkle& sprinkle);

/// popcount(future[i] & past[j]); throws DomainError unless i precedes j.
std::size_t interval_cardinality(const CausalMatrix& matrix, std::size_t i, std::size_t j);
/// Same without the relation check, for pairs already known to be related.
std::size_t interval_cardinality_unchecked(const CausalMatrix& matrix, std::size_t i, std::size_t j);

enum class SprinkleFormat { json, binary };

void write_sprinkle(std::ostream& out, const Sprinkle& sprinkle, SprinkleFormat format);
Sprinkle read_sprinkle(std::istream& in);
void save_sprinkle(const std::string& path, const Sprinkle& sprinkle, SprinkleFormat format);
/// Detects the format from the leading bytes.
Sprinkle load_sprinkle(const std::string& path);

}  // namespace causet::sprinkling
