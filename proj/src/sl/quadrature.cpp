#include "slzeta/sl/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace slzeta::sl {

QuadratureRule gauss_legendre(int order) {
  if (order < 1) throw std::invalid_argument("quadrature order must be >= 1");
  const auto n = static_cast<std::size_t>(order);
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  // Newton on P_n from the Chebyshev-like initial guess; symmetric pairs.
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute derivative at the converged node.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= order; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = order == 1 ? 1.0 : order * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

QuadratureRule composite_gauss_legendre(double a, double b, int panels,
                                        int order) {
  if (panels < 1) throw std::invalid_argument("need at least one panel");
  if (!(b > a)) throw std::invalid_argument("empty interval");
  const QuadratureRule ref = gauss_legendre(order);
  const double h = (b - a) / panels;
  QuadratureRule rule;
  rule.nodes.reserve(static_cast<std::size_t>(panels) * ref.size());
  rule.weights.reserve(rule.nodes.capacity());
  for (int p = 0; p < panels; ++p) {
    const double left = a + p * h;
    for (std::size_t i = 0; i < ref.size(); ++i) {
      rule.nodes.push_back(left + 0.5 * h * (ref.nodes[i] + 1.0));
      rule.weights.push_back(0.5 * h * ref.weights[i]);
    }
  }
  return rule;
}

std::vector<double> cumulative_integration_matrix(const QuadratureRule& rule) {
  const std::size_t n = rule.size();
  std::vector<double> out(n * n, 0.0);
  // Each Lagrange basis polynomial has degree n-1, so the n-point rule
  // mapped onto [-1, x_r] integrates it exactly.
  for (std::size_t r = 0; r < n; ++r) {
    const double half = 0.5 * (rule.nodes[r] + 1.0);
    for (std::size_t q = 0; q < n; ++q) {
      const double t = -1.0 + half * (rule.nodes[q] + 1.0);
      const double wq = half * rule.weights[q];
      for (std::size_t s = 0; s < n; ++s) {
        double ell = 1.0;
        for (std::size_t j = 0; j < n; ++j) {
          if (j != s) ell *= (t - rule.nodes[j]) / (rule.nodes[s] - rule.nodes[j]);
        }
        out[r * n + s] += wq * ell;
      }
    }
  }
  return out;
}

}  // namespace slzeta::sl
