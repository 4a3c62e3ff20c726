#pragma once

#include <vector>

#include "causet/exact_scalar.hpp"

namespace causet::coefficients {

/// Volume of the unit k-sphere, 2 pi^((k+1)/2) / Gamma((k+1)/2).
ExactScalar sphere_volume(int k);

/// c_d = S_{d-2} / (d (d-1) 2^(d/2-1)); the volume of a diamond with
/// light-cone extents u, v is c_d (u v)^(d/2).
ExactScalar volume_constant(int d);

ExactScalar alpha(int d);
ExactScalar beta(int d);

/// alpha/beta from the dimension-only closed form (no alpha/beta calls).
ExactScalar alpha_over_beta(int d);

/// Number of layers entering the operator: d/2+2 (even), (d-1)/2+2 (odd).
int layer_count(int d);

/// C_i as an exact rational; zero for i > layer_count(d).
Rational layer_coefficient(int d, int i);

/// zeta_d = -alpha_d * (l/l_p)^(d-2).
ExactScalar zeta(int d, const Rational& l_over_lp = 1);

struct CoefficientSet {
  int dimension = 0;
  ExactScalar c_d;
  ExactScalar alpha;
  ExactScalar beta;
  int layer_count = 0;
  std::vector<Rational> layer_coefficients;  // C_1..C_{n_d}
  Rational l_over_lp = 1;
  ExactScalar zeta;
  Rational ricci_prefactor = Rational(-1, 2);
};

CoefficientSet coefficient_set(int d, const Rational& l_over_lp = 1);

/// Double-precision view used by the sampling kernels.
struct NumericCoefficients {
  int dimension = 0;
  double alpha = 0;
  double beta = 0;
  std::vector<double> layer_coefficients;
};

NumericCoefficients numeric(const CoefficientSet& set);

}  // namespace causet::coefficients
