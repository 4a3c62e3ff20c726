#include <bit>

#include "causet/errors.hpp"
#include "causet/sprinkling.hpp"

namespace causet::sprinkling {

namespace {

std::size_t popcount_row(const std::uint64_t* row, std::size_t words) {
  std::size_t out = 0;
  for (std::size_t w = 0; w < words; ++w) out += static_cast<std::size_t>(std::popcount(row[w]));
  return out;
}

void fill_future_row(CausalMatrix& m, const Sprinkle& s, std::size_t i) {
  const int d = s.dimension();
  const double* x = s.event(i);
  for (std::size_t j = i + 1; j < s.size(); ++j) {
    if (causally_precedes(x, s.event(j), d)) m.set(i, j);
  }
}

}  // namespace

CausalMatrix::CausalMatrix(std::size_t n)
    : n_(n), words_((n + 63) / 64), future_(n * ((n + 63) / 64), 0), past_(n * ((n + 63) / 64), 0) {}

std::size_t CausalMatrix::future_count(std::size_t i) const { return popcount_row(future_row(i), words_); }

std::size_t CausalMatrix::past_count(std::size_t i) const { return popcount_row(past_row(i), words_); }

std::size_t CausalMatrix::relation_count() const { return popcount_row(future_.data(), future_.size()); }

void CausalMatrix::set(std::size_t i, std::size_t j) {
  if (i >= n_ || j >= n_ || i == j) throw DomainError("invalid relation index");
  future_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
}

void CausalMatrix::rebuild_past(bool parallel) {
  const long n = static_cast<long>(n_);
#pragma omp parallel for schedule(static) if (parallel)
  for (long j = 0; j < n; ++j) {
    std::uint64_t* row = past_.data() + static_cast<std::size_t>(j) * words_;
    for (std::size_t w = 0; w < words_; ++w) row[w] = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      if (precedes(i, static_cast<std::size_t>(j))) row[i / 64] |= std::uint64_t{1} << (i % 64);
    }
  }
}

bool CausalMatrix::operator==(const CausalMatrix& other) const {
  return n_ == other.n_ && future_ == other.future_ && past_ == other.past_;
}

CausalMatrix causal_matrix(const Sprinkle& sprinkle) {
  CausalMatrix m(sprinkle.size());
  const long n = static_cast<long>(sprinkle.size());
  // Rows are disjoint word ranges, so threads never share a word.
#pragma omp parallel for schedule(dynamic, 16)
  for (long i = 0; i < n; ++i) fill_future_row(m, sprinkle, static_cast<std::size_t>(i));
  m.rebuild_past();
  return m;
}

CausalMatrix causal_matrix_serial(const Sprinkle& sprinkle) {
  CausalMatrix m(sprinkle.size());
  for (std::size_t i = 0; i < sprinkle.size(); ++i) fill_future_row(m, sprinkle, i);
  m.rebuild_past(false);
  return m;
}

std::size_t interval_cardinality_unchecked(const CausalMatrix& matrix, std::size_t i, std::size_t j) {
  const std::uint64_t* f = matrix.future_row(i);
  const std::uint64_t* p = matrix.past_row(j);
  std::size_t out = 0;
  for (std::size_t w = 0; w < matrix.words(); ++w) out += static_cast<std::size_t>(std::popcount(f[w] & p[w]));
  return out;
}

std::size_t interval_cardinality(const CausalMatrix& matrix, std::size_t i, std::size_t j) {
  if (i >= matrix.size() || j >= matrix.size()) throw DomainError("element index out of range");
  if (!matrix.precedes(i, j)) throw DomainError("interval needs related elements");
  return interval_cardinality_unchecked(matrix, i, j);
}

}  // namespace causet::sprinkling
