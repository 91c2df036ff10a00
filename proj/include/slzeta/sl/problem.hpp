#pragma once

#include <functional>
#include <string>

#include "slzeta/error.hpp"

namespace slzeta::sl {

using Coefficient = std::function<double(double)>;

/// -(p y')' + q y = lambda w y on [a, b] with
///   y(a) cos(alpha) - (p y')(a) sin(alpha) = 0,
///   y(b) cos(beta)  - (p y')(b) sin(beta)  = 0.
/// Zeta values are taken over lambda_k - shift.
struct Problem {
  double a = 0.0;
  double b = 1.0;
  Coefficient p;
  Coefficient q;
  Coefficient w;
  double alpha = 0.0;
  double beta = 0.0;
  double shift = 0.0;
};

class SolverError : public Error {
 public:
  using Error::Error;
};

/// p or w is not bounded away from zero on the sampling grid.
class SingularCoefficient : public SolverError {
 public:
  using SolverError::SolverError;
};

/// The shift is (numerically) an eigenvalue: psi_- and psi_+ are dependent.
class EigenvalueShiftCollision : public SolverError {
 public:
  using SolverError::SolverError;
};

class OutOfDomain : public SolverError {
 public:
  using SolverError::SolverError;
};

class ConvergenceFailure : public SolverError {
 public:
  ConvergenceFailure(const std::string& what, double lo, double hi);
  double lower() const noexcept { return lo_; }
  double upper() const noexcept { return hi_; }

 private:
  double lo_;
  double hi_;
};

class ZeroEigenvalue : public SolverError {
 public:
  using SolverError::SolverError;
};

/// The trace and theorem paths are implemented for w = 1 only.
class WeightNotSupported : public SolverError {
 public:
  using SolverError::SolverError;
};

class InvalidProblem : public SolverError {
 public:
  using SolverError::SolverError;
};

/// Checks endpoints, angles and that p, w stay positive on a probe grid.
void validate(const Problem& problem, int probe_points = 257);

/// True when w evaluates to exactly 1 on the probe grid.
bool has_unit_weight(const Problem& problem, int probe_points = 257);

/// (int_a^b sqrt(w/p) dx)^2, so lambda_k ~ k^2 pi^2 / weyl_constant.
double weyl_constant(const Problem& problem, int panels = 256);

namespace models {

/// -y'' = lambda y on (0, pi), y(0) = y(pi) = 0. lambda_k = k^2.
Problem dirichlet_on_pi();

/// -u'' = lambda u on [0, 1], u(0) = u'(1) = 0. lambda_k = ((k - 1/2) pi)^2.
Problem mixed_unit();

/// -y'' + x y = lambda y on [0, 1], Dirichlet at both ends.
Problem linear_potential();

}  // namespace models

}  // namespace slzeta::sl
