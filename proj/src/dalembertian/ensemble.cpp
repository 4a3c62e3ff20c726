#include <cmath>

#include "causet/dalembertian.hpp"
#include "causet/errors.hpp"
#include "causet/parallel.hpp"

namespace causet::dalembertian {

namespace {

double pairwise(const double* v, std::size_t n) {
  if (n == 0) return 0;
  if (n == 1) return v[0];
  const std::size_t h = n / 2;
  return pairwise(v, h) + pairwise(v + h, n - h);
}

}  // namespace

double pairwise_sum(const std::vector<double>& values) { return pairwise(values.data(), values.size()); }

EnsembleReport ensemble_mean_b(const sprinkling::DiamondSpec& spec, const FieldSpec& field,
                               const coefficients::CoefficientSet& coeffs, std::size_t runs, std::uint64_t master_seed) {
  sprinkling::validate(spec);
  if (!spec.include_top_element) throw DomainError("ensemble evaluation needs the future tip");
  if (runs < 2) throw DomainError("ensemble needs at least two runs");
  if (coeffs.dimension != spec.dimension || field.dimension() != spec.dimension) throw DomainError("dimension mismatch");
  if (const auto& w = field.window()) {
    // Support must stay inside the diamond, whose past of the tip reaches tau.
    if (w->r_out > spec.tau / 2) throw DomainError("window support exceeds the diamond");
  }

  EnsembleReport report;
  report.spec = spec;
  report.field = field.to_string();
  report.master_seed = master_seed;
  report.runs = runs;
  report.target = continuum_dalembertian(field, std::vector<double>(static_cast<std::size_t>(spec.dimension), 0.0));
  report.values.assign(runs, 0.0);
  report.sizes.assign(runs, 0);

  const coefficients::NumericCoefficients numeric = coefficients::numeric(coeffs);
  parallel_for(runs, [&](std::size_t r) {
    sprinkling::Rng rng = sprinkling::run_stream(master_seed, r);
    const sprinkling::Sprinkle s = sprinkling::sample_diamond(spec, rng, master_seed);
    const sprinkling::CausalMatrix m = sprinkling::causal_matrix_serial(s);
    report.values[r] = apply_b(numeric, s, m, field, *s.top_index);
    report.sizes[r] = s.size();
  });

  const double n = static_cast<double>(runs);
  report.mean = pairwise_sum(report.values) / n;
  std::vector<double> sq(runs);
  for (std::size_t r = 0; r < runs; ++r) sq[r] = (report.values[r] - report.mean) * (report.values[r] - report.mean);
  report.standard_error = std::sqrt(pairwise_sum(sq) / (n - 1)) / std::sqrt(n);
  return report;
}

}  // namespace causet::dalembertian
