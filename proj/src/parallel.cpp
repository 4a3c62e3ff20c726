#include "causet/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <mutex>
#include <string>

#include "causet/errors.hpp"

namespace causet {

void set_thread_count(int threads) {
  if (threads < 1) throw DomainError("thread count must be >= 1");
  omp_set_num_threads(threads);
}

int thread_count() { return omp_get_max_threads(); }

std::optional<int> resolve_thread_count(std::optional<int> requested) {
  if (requested) return requested;
  if (const char* env = std::getenv("CAUSET_THREADS")) {
    try {
      int value = std::stoi(env);
      if (value >= 1) return value;
    } catch (const std::exception&) {
    }
    throw DomainError(std::string("CAUSET_THREADS is not a positive integer: ") + env);
  }
  return std::nullopt;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  std::exception_ptr failure;
  std::mutex guard;
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(guard);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace causet
