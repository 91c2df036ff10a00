#include "slzeta/sl/basis.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "slzeta/sl/sampling.hpp"

namespace slzeta::sl {

namespace {

struct Trajectory {
  std::vector<double> u;
  std::vector<double> v;
};

// Classical RK4 for u' = v / p, v' = (q - shift w) u on the sampled grid,
// forward from x = a or backward from x = b.
Trajectory integrate(const SampledCoefficients& c, double shift, double u0,
                     double v0, bool forward) {
  const int n = c.intervals;
  Trajectory out;
  out.u.resize(static_cast<std::size_t>(n) + 1);
  out.v.resize(out.u.size());
  const auto rhs = [&](int j, double u, double v, double& du, double& dv) {
    const auto k = static_cast<std::size_t>(j);
    du = v / c.p[k];
    dv = (c.q[k] - shift * c.w[k]) * u;
  };
  const int start = forward ? 0 : n;
  const int dir = forward ? 1 : -1;
  const double h = dir * c.h;
  double u = u0;
  double v = v0;
  out.u[static_cast<std::size_t>(start)] = u;
  out.v[static_cast<std::size_t>(start)] = v;
  for (int s = 0; s < n; ++s) {
    const int i = start + dir * s;
    const int j0 = 2 * i;
    const int jm = j0 + dir;
    const int j1 = j0 + 2 * dir;
    double k1u, k1v, k2u, k2v, k3u, k3v, k4u, k4v;
    rhs(j0, u, v, k1u, k1v);
    rhs(jm, u + 0.5 * h * k1u, v + 0.5 * h * k1v, k2u, k2v);
    rhs(jm, u + 0.5 * h * k2u, v + 0.5 * h * k2v, k3u, k3v);
    rhs(j1, u + h * k3u, v + h * k3v, k4u, k4v);
    u += h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
    v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    out.u[static_cast<std::size_t>(i + dir)] = u;
    out.v[static_cast<std::size_t>(i + dir)] = v;
  }
  return out;
}

// Relative RK4 error of `fine` (twice the steps of `coarse`), Richardson
// style: the difference at shared nodes over 2^4 - 1.
double halving_estimate(const Trajectory& coarse, const Trajectory& fine) {
  double scale_u = 0.0;
  double scale_v = 0.0;
  for (std::size_t i = 0; i < fine.u.size(); ++i) {
    scale_u = std::max(scale_u, std::abs(fine.u[i]));
    scale_v = std::max(scale_v, std::abs(fine.v[i]));
  }
  double err = 0.0;
  for (std::size_t i = 0; i < coarse.u.size(); ++i) {
    err = std::max(err, std::abs(fine.u[2 * i] - coarse.u[i]) /
                            std::max(scale_u, 1e-300));
    err = std::max(err, std::abs(fine.v[2 * i] - coarse.v[i]) /
                            std::max(scale_v, 1e-300));
  }
  return err / 15.0;
}

double hermite(double t, double h, double f0, double d0, double f1,
               double d1) {
  const double t2 = t * t;
  const double t3 = t2 * t;
  return (2 * t3 - 3 * t2 + 1) * f0 + (t3 - 2 * t2 + t) * h * d0 +
         (-2 * t3 + 3 * t2) * f1 + (t3 - t2) * h * d1;
}

}  // namespace

BasisPair solve_basis(const Problem& problem, int intervals,
                      const SolverOptions& options) {
  validate(problem);
  if (intervals < 16) throw std::invalid_argument("basis grid needs >= 16 intervals");
  const double sa = std::sin(problem.alpha);
  const double ca = std::cos(problem.alpha);
  const double sb = std::sin(problem.beta);
  const double cb = std::cos(problem.beta);

  int n = intervals;
  SampledCoefficients coarse_c = sample_coefficients(problem, n);
  Trajectory coarse_minus = integrate(coarse_c, problem.shift, sa, ca, true);
  Trajectory coarse_plus = integrate(coarse_c, problem.shift, sb, cb, false);
  SampledCoefficients fine_c;
  Trajectory fine_minus;
  Trajectory fine_plus;
  double err = 0.0;
  for (;;) {
    fine_c = sample_coefficients(problem, 2 * n);
    fine_minus = integrate(fine_c, problem.shift, sa, ca, true);
    fine_plus = integrate(fine_c, problem.shift, sb, cb, false);
    err = std::max(halving_estimate(coarse_minus, fine_minus),
                   halving_estimate(coarse_plus, fine_plus));
    if (err <= options.ode_tolerance || 4 * n > options.max_basis_intervals) {
      break;
    }
    n *= 2;
    coarse_minus = std::move(fine_minus);
    coarse_plus = std::move(fine_plus);
  }

  BasisPair out;
  const int m = fine_c.intervals;
  out.h_ = fine_c.h;
  out.grid_.resize(static_cast<std::size_t>(m) + 1);
  for (int i = 0; i <= m; ++i) {
    out.grid_[static_cast<std::size_t>(i)] = problem.a + i * fine_c.h;
  }
  out.grid_.back() = problem.b;
  out.shift_ = problem.shift;
  out.alpha_ = problem.alpha;
  out.beta_ = problem.beta;
  out.ode_error_ = err;
  out.unit_weight_ = has_unit_weight(problem);

  const auto finish = [&](Trajectory&& t) {
    BasisPair::Solution s;
    s.u = std::move(t.u);
    s.v = std::move(t.v);
    s.du.resize(s.u.size());
    s.dv.resize(s.u.size());
    for (std::size_t i = 0; i < s.u.size(); ++i) {
      s.du[i] = s.v[i] / fine_c.p[2 * i];
      s.dv[i] = (fine_c.q[2 * i] - problem.shift * fine_c.w[2 * i]) * s.u[i];
    }
    return s;
  };
  out.minus_ = finish(std::move(fine_minus));
  out.plus_ = finish(std::move(fine_plus));

  out.wronskian_ = out.wronskian_at(0);
  double scale = 0.0;
  for (std::size_t i = 0; i < out.grid_.size(); ++i) {
    scale = std::max(scale, std::abs(out.minus_.u[i] * out.plus_.v[i]) +
                                std::abs(out.plus_.u[i] * out.minus_.v[i]));
  }
  if (!(std::abs(out.wronskian_) > options.collision_tolerance * scale)) {
    std::ostringstream os;
    os.precision(17);
    os << "shift " << problem.shift
       << " is numerically an eigenvalue (W = " << out.wronskian_
       << ", scale " << scale << ")";
    throw EigenvalueShiftCollision(os.str());
  }
  return out;
}

double BasisPair::wronskian_at(std::size_t node) const {
  return minus_.u.at(node) * plus_.v.at(node) -
         plus_.u.at(node) * minus_.v.at(node);
}

double BasisPair::wronskian_drift() const {
  double drift = 0.0;
  for (std::size_t i = 0; i < grid_.size(); ++i) {
    drift = std::max(drift, std::abs(wronskian_at(i) - wronskian_));
  }
  return drift / std::abs(wronskian_);
}

void BasisPair::check_domain(double x) const {
  const double slack = 1e-12 * (b() - a());
  if (!(x >= a() - slack && x <= b() + slack)) {
    std::ostringstream os;
    os << "point " << x << " outside [" << a() << ", " << b() << "]";
    throw OutOfDomain(os.str());
  }
}

double BasisPair::interpolate(const Solution& sol, bool quasi, double x) const {
  check_domain(x);
  const int cells = intervals();
  int i = static_cast<int>(std::floor((x - a()) / h_));
  i = std::clamp(i, 0, cells - 1);
  const auto k = static_cast<std::size_t>(i);
  const double t = (x - grid_[k]) / h_;
  if (quasi) {
    return hermite(t, h_, sol.v[k], sol.dv[k], sol.v[k + 1], sol.dv[k + 1]);
  }
  return hermite(t, h_, sol.u[k], sol.du[k], sol.u[k + 1], sol.du[k + 1]);
}

double BasisPair::psi_minus(double x) const { return interpolate(minus_, false, x); }
double BasisPair::psi_plus(double x) const { return interpolate(plus_, false, x); }
double BasisPair::quasi_minus(double x) const { return interpolate(minus_, true, x); }
double BasisPair::quasi_plus(double x) const { return interpolate(plus_, true, x); }

double BasisPair::green(double s, double t) const {
  const double lo = std::min(s, t);
  const double hi = std::max(s, t);
  return -psi_minus(lo) * psi_plus(hi) / wronskian_;
}

double BasisPair::green_quasi_dt(double s, double t) const {
  if (t <= s) return -quasi_minus(t) * psi_plus(s) / wronskian_;
  return -psi_minus(s) * quasi_plus(t) / wronskian_;
}

double BasisPair::boundary_residual_a(double s) const {
  return std::cos(alpha_) * green(s, a()) -
         std::sin(alpha_) * green_quasi_dt(s, a());
}

double BasisPair::boundary_residual_b(double s) const {
  // At t = b the branch t >= s applies.
  const double quasi = -psi_minus(s) * quasi_plus(b()) / wronskian_;
  return std::cos(beta_) * green(s, b()) - std::sin(beta_) * quasi;
}

}  // namespace slzeta::sl
