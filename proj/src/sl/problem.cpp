#include "slzeta/sl/problem.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "slzeta/sl/quadrature.hpp"

namespace slzeta::sl {

ConvergenceFailure::ConvergenceFailure(const std::string& what, double lo,
                                       double hi)
    : SolverError([&] {
        std::ostringstream os;
        os.precision(17);
        os << what << " (bracket [" << lo << ", " << hi << "])";
        return os.str();
      }()),
      lo_(lo),
      hi_(hi) {}

void validate(const Problem& problem, int probe_points) {
  if (!std::isfinite(problem.a) || !std::isfinite(problem.b) ||
      !(problem.b > problem.a)) {
    throw InvalidProblem("interval must satisfy a < b");
  }
  if (!problem.p || !problem.q || !problem.w) {
    throw InvalidProblem("coefficients p, q, w must all be set");
  }
  for (double angle : {problem.alpha, problem.beta}) {
    if (!(angle >= 0.0 && angle < std::numbers::pi)) {
      throw InvalidProblem("boundary angles must lie in [0, pi)");
    }
  }
  if (!std::isfinite(problem.shift)) throw InvalidProblem("shift not finite");
  const double h = (problem.b - problem.a) / (probe_points - 1);
  for (int i = 0; i < probe_points; ++i) {
    const double x = problem.a + i * h;
    const double p = problem.p(x);
    const double w = problem.w(x);
    if (!(p > 0.0) || !std::isfinite(p) || !(w > 0.0) || !std::isfinite(w)) {
      std::ostringstream os;
      os << "p and w must be positive; p(" << x << ") = " << p << ", w(" << x
         << ") = " << w;
      throw SingularCoefficient(os.str());
    }
    if (!std::isfinite(problem.q(x))) {
      throw InvalidProblem("q is not finite at x = " + std::to_string(x));
    }
  }
}

bool has_unit_weight(const Problem& problem, int probe_points) {
  const double h = (problem.b - problem.a) / (probe_points - 1);
  for (int i = 0; i < probe_points; ++i) {
    if (problem.w(problem.a + i * h) != 1.0) return false;
  }
  return true;
}

double weyl_constant(const Problem& problem, int panels) {
  const QuadratureRule rule =
      composite_gauss_legendre(problem.a, problem.b, panels, 8);
  double length = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double x = rule.nodes[i];
    length += rule.weights[i] * std::sqrt(problem.w(x) / problem.p(x));
  }
  return length * length;
}

namespace models {

namespace {
double one(double) { return 1.0; }
double zero(double) { return 0.0; }
}  // namespace

Problem dirichlet_on_pi() {
  return Problem{0.0, std::numbers::pi, one, zero, one, 0.0, 0.0, 0.0};
}

Problem mixed_unit() {
  return Problem{0.0, 1.0, one, zero, one, 0.0, 0.5 * std::numbers::pi, 0.0};
}

Problem linear_potential() {
  return Problem{0.0, 1.0, one, [](double x) { return x; }, one,
                 0.0, 0.0, 0.0};
}

}  // namespace models

}  // namespace slzeta::sl
