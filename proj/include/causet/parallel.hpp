#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <optional>

namespace causet {

/// Sets the OpenMP team size for subsequent parallel kernels.
void set_thread_count(int threads);
int thread_count();

/// Thread count from an explicit value, else CAUSET_THREADS, else nullopt.
std::optional<int> resolve_thread_count(std::optional<int> requested);

/// Runs body(i) for i in [0, n) on the OpenMP team with dynamic schedule.
/// The first exception thrown by any iteration is rethrown on the caller.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace causet
