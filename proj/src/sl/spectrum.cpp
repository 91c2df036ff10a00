#include "slzeta/sl/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>

#include <boost/math/tools/toms748_solve.hpp>

namespace slzeta::sl {

namespace {

constexpr int kMaxLevel = 14;  // prufer_intervals * 2^14 steps at most

}  // namespace

PruferShooter::PruferShooter(const Problem& problem,
                             const SolverOptions& options)
    : problem_(problem), options_(options) {
  validate(problem_);
  tables_.push_back(sample_coefficients(problem_, options_.prufer_intervals));
  const SampledCoefficients& t = tables_.front();
  p_min_ = t.p.front();
  for (std::size_t j = 0; j < t.p.size(); ++j) {
    p_mean_ += t.p[j];
    q_mean_ += t.q[j];
    w_mean_ += t.w[j];
    p_min_ = std::min(p_min_, t.p[j]);
    w_max_ = std::max(w_max_, t.w[j]);
    q_abs_max_ = std::max(q_abs_max_, std::abs(t.q[j]));
  }
  const auto uniform = [](const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(), [&](double x) { return x == v[0]; });
  };
  constant_ = uniform(t.p) && uniform(t.q) && uniform(t.w);
  const double count = static_cast<double>(t.p.size());
  p_mean_ /= count;
  q_mean_ /= count;
  w_mean_ /= count;
}

const SampledCoefficients& PruferShooter::table(int level) const {
  while (static_cast<int>(tables_.size()) <= level) {
    const int next = tables_.back().intervals * 2;
    tables_.push_back(sample_coefficients(problem_, next));
  }
  return tables_[static_cast<std::size_t>(level)];
}

double PruferShooter::scale(double lambda) const {
  const double length = problem_.b - problem_.a;
  const double floor = 1e-2 * p_mean_ / (length * length);
  return std::sqrt(p_mean_ *
                   std::max(std::abs(lambda * w_mean_ - q_mean_), floor));
}

int PruferShooter::level_for(double lambda) const {
  // With constant coefficients above the floor of the scale, theta' is
  // constant and every grid integrates it exactly.
  const double length = problem_.b - problem_.a;
  if (constant_ &&
      lambda * w_mean_ - q_mean_ >= 1e-2 * p_mean_ / (length * length)) {
    return 0;
  }
  const double s = scale(lambda);
  const double rate =
      std::max(s / p_min_, (std::abs(lambda) * w_max_ + q_abs_max_) / s);
  const double needed =
      rate * (problem_.b - problem_.a) / options_.prufer_step_phase;
  int level = 0;
  double intervals = options_.prufer_intervals;
  while (intervals < needed && level < kMaxLevel) {
    intervals *= 2;
    ++level;
  }
  return level;
}

double PruferShooter::terminal_phase(double lambda, double s,
                                     int level) const {
  const SampledCoefficients& t = table(level);
  const double inv_s = 1.0 / s;
  const auto rhs = [&](std::size_t j, double theta) {
    const double c2 = std::cos(2.0 * theta);
    return 0.5 * (s / t.p[j]) * (1.0 + c2) +
           0.5 * (lambda * t.w[j] - t.q[j]) * inv_s * (1.0 - c2);
  };
  double theta = std::atan2(s * std::sin(problem_.alpha),
                            std::cos(problem_.alpha));
  const double h = t.h;
  for (int i = 0; i < t.intervals; ++i) {
    const auto j0 = static_cast<std::size_t>(2 * i);
    const double k1 = rhs(j0, theta);
    const double k2 = rhs(j0 + 1, theta + 0.5 * h * k1);
    const double k3 = rhs(j0 + 1, theta + 0.5 * h * k2);
    const double k4 = rhs(j0 + 2, theta + h * k3);
    theta += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return theta;
}

namespace {

// Phase of the boundary condition at b, in (0, pi].
double end_target(double s, double beta) {
  const double target = std::atan2(s * std::sin(beta), std::cos(beta));
  return target > 0.0 ? target : std::numbers::pi;
}

}  // namespace

double PruferShooter::mismatch(double lambda, int k, int level) const {
  const double s = scale(lambda);
  const int lvl = level < 0 ? level_for(lambda) : level;
  return terminal_phase(lambda, s, lvl) -
         (end_target(s, problem_.beta) + (k - 1) * std::numbers::pi);
}

int PruferShooter::count_below(double lambda) const {
  const double s = scale(lambda);
  const double excess = terminal_phase(lambda, s, level_for(lambda)) -
                        end_target(s, problem_.beta);
  return std::max(0, static_cast<int>(std::ceil(excess / std::numbers::pi)));
}

SpectrumSlice eigenvalues(const Problem& problem, int count,
                          const SolverOptions& options) {
  if (count < 1) throw std::invalid_argument("eigenvalue count must be >= 1");
  PruferShooter shooter(problem, options);
  SpectrumSlice out;
  out.weyl_constant = weyl_constant(problem);
  out.tolerance = options.eigen_tolerance;
  out.eigenvalues.reserve(static_cast<std::size_t>(count));
  const double a_coeff = std::numbers::pi * std::numbers::pi / out.weyl_constant;
  const double tol = options.eigen_tolerance;

  const SampledCoefficients base = sample_coefficients(problem, 64);
  double q_over_w_min = base.q.front() / base.w.front();
  for (std::size_t j = 0; j < base.q.size(); ++j) {
    q_over_w_min = std::min(q_over_w_min, base.q[j] / base.w[j]);
  }

  const auto fail = [](const char* what, double lo, double hi) {
    return ConvergenceFailure(what, lo, hi);
  };

  for (int k = 1; k <= count; ++k) {
    double lo = 0.0;
    if (k == 1) {
      lo = q_over_w_min - a_coeff;
      double span = a_coeff;
      int guard = 0;
      while (shooter.mismatch(lo, 1) >= 0.0) {
        if (++guard > 200) throw fail("no lower bracket for lambda_1", lo, lo);
        lo -= span;
        span *= 2.0;
      }
    } else {
      lo = out.eigenvalues.back();
    }

    double step = a_coeff * (2.0 * k - 1.0);
    if (k >= 3) {
      const std::size_t last = out.eigenvalues.size() - 1;
      step = std::max(step * 0.25, 1.5 * (out.eigenvalues[last] -
                                          out.eigenvalues[last - 1]));
    }
    double hi = lo + step;
    int guard = 0;
    for (;;) {
      const double f = shooter.mismatch(hi, k);
      if (f > 0.0) break;
      if (++guard > 200) throw fail("no upper bracket", lo, hi);
      if (f < 0.0) lo = hi;
      step *= 2.0;
      hi = lo + step;
    }

    // One grid for the whole refinement keeps the mismatch continuous.
    const int level = shooter.level_for(hi);
    const auto f = [&](double lambda) {
      return shooter.mismatch(lambda, k, level);
    };
    double f_lo = f(lo);
    double f_hi = f(hi);
    guard = 0;
    while (f_lo >= 0.0 && f_lo != 0.0) {
      if (++guard > 60) throw fail("lower bracket lost on fine grid", lo, hi);
      lo -= 1e-6 * std::max(std::abs(lo), a_coeff);
      f_lo = f(lo);
    }
    while (f_hi <= 0.0 && f_hi != 0.0) {
      if (++guard > 60) throw fail("upper bracket lost on fine grid", lo, hi);
      hi += 1e-6 * std::max(std::abs(hi), a_coeff);
      f_hi = f(hi);
    }

    double lambda = lo;
    if (f_lo == 0.0) {
      lambda = lo;
    } else if (f_hi == 0.0) {
      lambda = hi;
    } else {
      const auto done = [&](double x, double y) {
        return std::abs(y - x) <=
               tol * std::max({std::abs(x), std::abs(y), a_coeff});
      };
      std::uintmax_t iterations = 200;
      const auto root = boost::math::tools::toms748_solve(
          f, lo, hi, f_lo, f_hi, done, iterations);
      if (iterations >= 200) {
        throw fail("eigenvalue refinement did not converge", root.first,
                   root.second);
      }
      lambda = 0.5 * (root.first + root.second);
    }
    if (!out.eigenvalues.empty() && !(lambda > out.eigenvalues.back())) {
      throw fail("eigenvalues out of order", out.eigenvalues.back(), lambda);
    }
    out.eigenvalues.push_back(lambda);
  }
  return out;
}

}  // namespace slzeta::sl
