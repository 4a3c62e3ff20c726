#include "causet/convergence.hpp"

#include <cmath>
#include <limits>

namespace causet {

double fitted_decay_exponent(const std::vector<double>& z, const std::vector<double>& error, double floor, size_t start) {
  std::vector<double> xs;
  std::vector<double> ys;
  for (size_t i = start; i < z.size() && i < error.size(); ++i) {
    if (!(error[i] > floor)) continue;
    xs.push_back(std::log(z[i]));
    ys.push_back(-std::log(error[i]));
  }
  if (xs.size() < 2) return std::numeric_limits<double>::infinity();
  double mx = 0;
  double my = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(xs.size());
  my /= static_cast<double>(xs.size());
  double sxy = 0;
  double sxx = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  return sxy / sxx;
}

bool monotone_decreasing(const std::vector<double>& error, double floor, size_t start) {
  for (size_t i = start; i + 1 < error.size(); ++i) {
    if (error[i] <= floor && error[i + 1] <= floor) continue;
    if (!(error[i + 1] < error[i])) return false;
  }
  return true;
}

}  // namespace causet
