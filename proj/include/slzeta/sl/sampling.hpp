#pragma once

#include <vector>

#include "slzeta/sl/problem.hpp"

namespace slzeta::sl {

/// p, q, w on a uniform grid at every half step: index 2i is node i,
/// index 2i+1 the midpoint of interval i. This is what fixed-step RK4 reads.
struct SampledCoefficients {
  double a = 0.0;
  double b = 0.0;
  double h = 0.0;
  int intervals = 0;
  std::vector<double> p;
  std::vector<double> q;
  std::vector<double> w;

  double x_half(int j) const noexcept { return a + 0.5 * h * j; }
};

/// Throws SingularCoefficient if p or w is not positive and finite at a
/// sample, InvalidProblem if q is not finite.
SampledCoefficients sample_coefficients(const Problem& problem, int intervals);

}  // namespace slzeta::sl
