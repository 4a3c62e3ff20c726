#include <algorithm>
#include <bit>
#include <cmath>

#include "causet/dalembertian.hpp"
#include "causet/errors.hpp"

namespace causet::dalembertian {

namespace {

void check_max_size(int max_size) {
  if (max_size < 1) throw DomainError("histogram size must be >= 1");
}

void count_row(const sprinkling::CausalMatrix& m, std::size_t i, IntervalHistogram& h) {
  const std::size_t limit = h.counts.size();
  const std::uint64_t* row = m.future_row(i);
  for (std::size_t w = 0; w < m.words(); ++w) {
    std::uint64_t bits = row[w];
    while (bits) {
      const std::size_t j = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
      bits &= bits - 1;
      const std::size_t n = sprinkling::interval_cardinality_unchecked(m, i, j);
      if (n < limit) {
        ++h.counts[n];
      } else {
        ++h.overflow;
      }
    }
  }
}

}  // namespace

LayerDecomposition layer_populations(const sprinkling::CausalMatrix& matrix, std::size_t element, int n_layers) {
  if (element >= matrix.size()) throw DomainError("element index out of range");
  if (n_layers < 0) throw DomainError("layer count must be >= 0");
  LayerDecomposition out;
  out.layers.resize(static_cast<std::size_t>(n_layers));
  const std::uint64_t* row = matrix.past_row(element);
  for (std::size_t w = 0; w < matrix.words(); ++w) {
    std::uint64_t bits = row[w];
    while (bits) {
      const std::size_t y = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
      bits &= bits - 1;
      const std::size_t n = sprinkling::interval_cardinality_unchecked(matrix, y, element);
      if (n < out.layers.size()) {
        out.layers[n].push_back(y);
      } else {
        ++out.beyond;
      }
    }
  }
  return out;
}

double apply_b(const coefficients::NumericCoefficients& coeffs, const sprinkling::Sprinkle& sprinkle,
               const sprinkling::CausalMatrix& matrix, const FieldSpec& field, std::size_t element) {
  const int d = sprinkle.dimension();
  if (coeffs.dimension != d || field.dimension() != d) throw DomainError("dimension mismatch");
  if (element >= sprinkle.size()) throw DomainError("element index out of range");
  if (matrix.size() != sprinkle.size()) throw DomainError("matrix does not match the sprinkle");
  const double* x = sprinkle.event(element);
  std::vector<double> offset(static_cast<std::size_t>(d), 0.0);
  const LayerDecomposition layers =
      layer_populations(matrix, element, static_cast<int>(coeffs.layer_coefficients.size()));
  double sum = 0;
  for (std::size_t i = 0; i < layers.layers.size(); ++i) {
    double layer_sum = 0;
    for (std::size_t y : layers.layers[i]) {
      const double* p = sprinkle.event(y);
      for (int k = 0; k < d; ++k) offset[static_cast<std::size_t>(k)] = p[k] - x[k];
      layer_sum += field(offset.data());
    }
    sum += coeffs.layer_coefficients[i] * layer_sum;
  }
  std::fill(offset.begin(), offset.end(), 0.0);
  const double inv_l2 = std::pow(sprinkle.spec.density, 2.0 / d);
  return inv_l2 * (coeffs.alpha * field(offset.data()) + coeffs.beta * sum);
}

double apply_b(const coefficients::CoefficientSet& coeffs, const sprinkling::Sprinkle& sprinkle,
               const FieldSpec& field, std::size_t element) {
  return apply_b(coefficients::numeric(coeffs), sprinkle, sprinkling::causal_matrix(sprinkle), field, element);
}

IntervalHistogram interval_histogram(const sprinkling::CausalMatrix& matrix, int max_size) {
  check_max_size(max_size);
  IntervalHistogram total;
  total.counts.assign(static_cast<std::size_t>(max_size), 0);
  const long n = static_cast<long>(matrix.size());
#pragma omp parallel
  {
    IntervalHistogram local;
    local.counts.assign(static_cast<std::size_t>(max_size), 0);
#pragma omp for schedule(dynamic, 16) nowait
    for (long i = 0; i < n; ++i) count_row(matrix, static_cast<std::size_t>(i), local);
#pragma omp critical
    {
      for (std::size_t k = 0; k < local.counts.size(); ++k) total.counts[k] += local.counts[k];
      total.overflow += local.overflow;
    }
  }
  return total;
}

IntervalHistogram interval_histogram_serial(const sprinkling::CausalMatrix& matrix, int max_size) {
  check_max_size(max_size);
  IntervalHistogram out;
  out.counts.assign(static_cast<std::size_t>(max_size), 0);
  for (std::size_t i = 0; i < matrix.size(); ++i) count_row(matrix, i, out);
  return out;
}

ExactScalar action_exact(const coefficients::CoefficientSet& coeffs, std::uint64_t n,
                         const std::vector<std::uint64_t>& abundances) {
  const std::size_t nd = coeffs.layer_coefficients.size();
  if (abundances.size() < nd) {
    throw DomainError("action needs N_1..N_" + std::to_string(nd) + ", got " + std::to_string(abundances.size()));
  }
  Rational sum(0);
  for (std::size_t i = 0; i < nd; ++i) sum += coeffs.layer_coefficients[i] * Rational(Integer(std::to_string(abundances[i])));
  const Rational beta_over_alpha = 1 / coefficients::alpha_over_beta(coeffs.dimension).rational_value();
  const Rational bracket = Rational(Integer(std::to_string(n))) + beta_over_alpha * sum;
  return coeffs.zeta * ExactScalar(bracket);
}

double action(const coefficients::CoefficientSet& coeffs, std::uint64_t n, const std::vector<std::uint64_t>& abundances) {
  return action_exact(coeffs, n, abundances).to_double();
}

}  // namespace causet::dalembertian
