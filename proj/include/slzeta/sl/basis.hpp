#pragma once

#include <span>
#include <vector>

#include "slzeta/sl/options.hpp"
#include "slzeta/sl/problem.hpp"

namespace slzeta::sl {

/// psi_- and psi_+ solve -(p y')' + (q - shift w) y = 0 with
///   psi_-(a) = sin(alpha), (p psi_-')(a) = cos(alpha),
///   psi_+(b) = sin(beta),  (p psi_+')(b) = cos(beta).
/// Values and quasi-derivatives p y' are stored on a uniform grid; off-grid
/// values come from cubic Hermite interpolation using the ODE for the
/// derivatives. Immutable once built.
class BasisPair {
 public:
  double a() const noexcept { return grid_.front(); }
  double b() const noexcept { return grid_.back(); }
  int intervals() const noexcept { return static_cast<int>(grid_.size()) - 1; }
  double shift() const noexcept { return shift_; }
  /// Whether w was identically 1 on the probe grid.
  bool unit_weight() const noexcept { return unit_weight_; }
  std::span<const double> grid() const noexcept { return grid_; }

  /// W = psi_- (p psi_+') - psi_+ (p psi_-') evaluated at x = a.
  double wronskian() const noexcept { return wronskian_; }
  double wronskian_at(std::size_t node) const;
  /// max over nodes of |W(x_i) - W| / |W|.
  double wronskian_drift() const;
  /// Relative step-halving estimate of the RK4 error.
  double ode_error() const noexcept { return ode_error_; }

  double psi_minus(double x) const;
  double psi_plus(double x) const;
  double quasi_minus(double x) const;
  double quasi_plus(double x) const;

  /// G(s, t) = -psi_-(min(s,t)) psi_+(max(s,t)) / W.
  double green(double s, double t) const;
  /// p(t) dG/dt; one-sided from below when t == s.
  double green_quasi_dt(double s, double t) const;

  /// cos(alpha) G(s,a) - sin(alpha) (p dG/dt)(s,a), and the same at b.
  double boundary_residual_a(double s) const;
  double boundary_residual_b(double s) const;

 private:
  friend BasisPair solve_basis(const Problem&, int, const SolverOptions&);

  struct Solution {
    std::vector<double> u;   // y
    std::vector<double> v;   // p y'
    std::vector<double> du;  // y' = v / p
    std::vector<double> dv;  // (p y')' = (q - shift w) y
  };

  double interpolate(const Solution& sol, bool quasi, double x) const;
  void check_domain(double x) const;

  std::vector<double> grid_;
  double h_ = 0.0;
  Solution minus_;
  Solution plus_;
  double wronskian_ = 0.0;
  double ode_error_ = 0.0;
  double shift_ = 0.0;
  double alpha_ = 0.0;
  double beta_ = 0.0;
  bool unit_weight_ = false;
};

/// Integrates psi_- forward and psi_+ backward with RK4 on `intervals`
/// steps, halving the step until the estimate meets options.ode_tolerance.
BasisPair solve_basis(const Problem& problem, int intervals,
                      const SolverOptions& options = {});

}  // namespace slzeta::sl
