#pragma once

#include <vector>

namespace slzeta::sl {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const noexcept { return nodes.size(); }
};

/// Gauss-Legendre rule of the given order on [-1, 1], nodes ascending.
QuadratureRule gauss_legendre(int order);

/// `panels` equal panels on [a, b], each carrying the order-`order` rule.
QuadratureRule composite_gauss_legendre(double a, double b, int panels,
                                        int order);

/// Local integration matrix for one cell: entry (r, s) is the integral of
/// the s-th Lagrange basis polynomial on the nodes of `rule` from -1 to
/// node r. Row-major, order x order.
std::vector<double> cumulative_integration_matrix(const QuadratureRule& rule);

}  // namespace slzeta::sl
