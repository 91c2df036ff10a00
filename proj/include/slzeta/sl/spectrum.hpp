#pragma once

#include <vector>

#include "slzeta/sl/options.hpp"
#include "slzeta/sl/problem.hpp"
#include "slzeta/sl/sampling.hpp"

namespace slzeta::sl {

struct SpectrumSlice {
  std::vector<double> eigenvalues;  // lambda_1 < ... < lambda_K, unshifted
  double weyl_constant = 0.0;
  double tolerance = 0.0;  // relative refinement tolerance of each lambda_k

  std::size_t count() const noexcept { return eigenvalues.size(); }
};

/// Scaled Prufer phase for the eigenvalue equation. With y = r sin(theta),
/// p y' = S r cos(theta) and a constant scale S(lambda),
///   theta' = (S/p) cos^2(theta) + ((lambda w - q)/S) sin^2(theta),
/// and lambda_k is where theta(b) reaches the k-th boundary target. S is
/// chosen so theta' is nearly constant; for constant coefficients RK4 is
/// exact. Coefficient tables for finer grids are built on demand, so one
/// shooter must not be shared between threads.
class PruferShooter {
 public:
  PruferShooter(const Problem& problem, const SolverOptions& options);

  /// theta(b; lambda) - target_k(lambda); negative below lambda_k and
  /// positive above it. `level` selects the grid (-1 picks one for lambda).
  double mismatch(double lambda, int k, int level = -1) const;

  /// Grid level fine enough for lambda.
  int level_for(double lambda) const;

  /// Number of eigenvalues strictly below lambda.
  int count_below(double lambda) const;

 private:
  double scale(double lambda) const;
  double terminal_phase(double lambda, double s, int level) const;
  const SampledCoefficients& table(int level) const;

  Problem problem_;
  SolverOptions options_;
  mutable std::vector<SampledCoefficients> tables_;
  double p_mean_ = 0.0;
  double q_mean_ = 0.0;
  double w_mean_ = 0.0;
  double p_min_ = 0.0;
  double w_max_ = 0.0;
  double q_abs_max_ = 0.0;
  bool constant_ = false;
};

/// First `count` eigenvalues by Prufer shooting, each bracketed and refined
/// to relative tolerance options.eigen_tolerance.
SpectrumSlice eigenvalues(const Problem& problem, int count,
                          const SolverOptions& options = {});

}  // namespace slzeta::sl
