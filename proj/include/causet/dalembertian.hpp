#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "causet/coefficients.hpp"
#include "causet/sprinkling.hpp"

namespace causet::dalembertian {

/// Radial bump: 1 for r <= r_in, 0 for r >= r_out, quintic smoothstep between.
struct Window {
  double r_in = 0;
  double r_out = 1;
  double operator()(double r) const;
};

struct FieldTerm {
  double coefficient = 0;
  std::vector<int> powers;  // exponent of t, x_1, ..., x_{d-1}
};

/// Polynomial of total degree <= 4 in coordinates taken relative to the
/// evaluation element, times an optional radial window in the same frame.
class FieldSpec {
 public:
  FieldSpec() = default;
  FieldSpec(int dimension, std::vector<FieldTerm> terms, std::optional<Window> window = std::nullopt);

  /// Grammar: sum of products of a number, t^k, x<i>^k and window(r_in,r_out),
  /// e.g. "t^2*window(0.5,1)" or "2*x1^2 - 0.5*t*x1 + 1". The window may
  /// appear in several terms but must be the same each time; it multiplies
  /// the whole polynomial. In d = 2, "x" is accepted for x1.
  static FieldSpec parse(const std::string& text, int dimension);

  int dimension() const { return dimension_; }
  const std::vector<FieldTerm>& terms() const { return terms_; }
  const std::optional<Window>& window() const { return window_; }

  double polynomial(const double* offset) const;
  double operator()(const double* offset) const;

  /// a f + b g; the windows must agree.
  static FieldSpec linear_combination(double a, const FieldSpec& f, double b, const FieldSpec& g);

  std::string to_string() const;

 private:
  int dimension_ = 2;
  std::vector<FieldTerm> terms_;
  std::optional<Window> window_;
};

/// Mostly-plus box of the field at `offset`; throws DomainError inside the
/// window's transition shell.
double continuum_dalembertian(const FieldSpec& field, const std::vector<double>& offset);

struct LayerDecomposition {
  std::vector<std::vector<std::size_t>> layers;  // layers[i-1] = L_i
  std::size_t beyond = 0;                        // past elements deeper than the last layer
};

LayerDecomposition layer_populations(const sprinkling::CausalMatrix& matrix, std::size_t element, int n_layers);

/// rho^(2/d) (alpha phi(x) + beta sum_i C_i sum_{y in L_i} phi(y)).
double apply_b(const coefficients::NumericCoefficients& coeffs, const sprinkling::Sprinkle& sprinkle,
               const sprinkling::CausalMatrix& matrix, const FieldSpec& field, std::size_t element);
double apply_b(const coefficients::CoefficientSet& coeffs, const sprinkling::Sprinkle& sprinkle,
               const FieldSpec& field, std::size_t element);

struct IntervalHistogram {
  std::vector<std::uint64_t> counts;  // counts[i-1] = N_i
  std::uint64_t overflow = 0;         // pairs with n(x,y) >= max_size
};

IntervalHistogram interval_histogram(const sprinkling::CausalMatrix& matrix, int max_size);
IntervalHistogram interval_histogram_serial(const sprinkling::CausalMatrix& matrix, int max_size);

/// zeta [N + (beta/alpha) sum_{i<=n_d} C_i N_i], exact bracket times zeta.
ExactScalar action_exact(const coefficients::CoefficientSet& coeffs, std::uint64_t n,
                         const std::vector<std::uint64_t>& abundances);
double action(const coefficients::CoefficientSet& coeffs, std::uint64_t n, const std::vector<std::uint64_t>& abundances);

struct EnsembleReport {
  sprinkling::DiamondSpec spec;
  std::string field;
  std::uint64_t master_seed = 0;
  std::vector<double> values;
  double mean = 0;
  double standard_error = 0;
  std::size_t runs = 0;
  double target = 0;
  std::vector<std::size_t> sizes;  // element count per run
};

/// Sum by recursive halving; the result depends only on the input order.
double pairwise_sum(const std::vector<double>& values);

/// Runs independent sprinkles (stream r for run r), evaluates B at the
/// future tip and compares with the continuum box at the tip.
EnsembleReport ensemble_mean_b(const sprinkling::DiamondSpec& spec, const FieldSpec& field,
                               const coefficients::CoefficientSet& coeffs, std::size_t runs, std::uint64_t master_seed);

}  // namespace causet::dalembertian
