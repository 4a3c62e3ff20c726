#pragma once

#include <vector>

namespace causet {

/// Least-squares slope of -log(error) against log(z) over points from
/// index `start` whose error exceeds `floor`. Returns +inf when fewer than
/// two such points remain (converged to the floor).
double fitted_decay_exponent(const std::vector<double>& z, const std::vector<double>& error, double floor, size_t start = 1);

/// Errors strictly decrease from index `start` on; pairs that are both at
/// or below `floor` count as converged.
bool monotone_decreasing(const std::vector<double>& error, double floor, size_t start = 1);

}  // namespace causet
