#include <algorithm>
#include <cmath>

#include "slzeta/sl/zeta.hpp"

namespace slzeta::sl {

namespace {

// Eigenvalues of D^(1/2) G D^(1/2), which is similar to K = G D.
std::vector<double> symmetric_spectrum(const BasisPair& basis,
                                       const QuadratureRule& rule) {
  const auto m = static_cast<Eigen::Index>(rule.size());
  std::vector<double> minus(rule.size());
  std::vector<double> plus(rule.size());
  std::vector<double> root_w(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) {
    minus[i] = basis.psi_minus(rule.nodes[i]);
    plus[i] = basis.psi_plus(rule.nodes[i]);
    root_w[i] = std::sqrt(rule.weights[i]);
  }
  const double scale = -1.0 / basis.wronskian();
  Eigen::MatrixXd a(m, m);
  // Nodes are ascending, so min/max follow the index order.
  for (Eigen::Index j = 0; j < m; ++j) {
    const auto uj = static_cast<std::size_t>(j);
    for (Eigen::Index i = 0; i <= j; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      const double g = scale * minus[ui] * plus[uj];
      a(i, j) = root_w[ui] * g * root_w[uj];
      a(j, i) = a(i, j);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      a, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw SolverError("Nystrom eigenvalue solve failed");
  }
  const Eigen::VectorXd& ev = solver.eigenvalues();
  std::vector<double> out(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end(),
            [](double x, double y) { return std::abs(x) < std::abs(y); });
  return out;
}

double power_sum(const std::vector<double>& values, int n) {
  double sum = 0.0;
  for (double v : values) sum += std::pow(v, n);
  return sum;
}

}  // namespace

Eigen::MatrixXd nystrom_matrix(const BasisPair& basis,
                               const QuadratureRule& rule) {
  const auto m = static_cast<Eigen::Index>(rule.size());
  Eigen::MatrixXd k(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      const auto ui = static_cast<std::size_t>(i);
      const auto uj = static_cast<std::size_t>(j);
      k(i, j) = basis.green(rule.nodes[ui], rule.nodes[uj]) * rule.weights[uj];
    }
  }
  return k;
}

NystromTrace::NystromTrace(const Problem& problem, int nodes,
                           const SolverOptions& options) {
  if (nodes < 2) throw std::invalid_argument("Nystrom rule needs >= 2 nodes");
  validate(problem);
  if (!has_unit_weight(problem)) {
    throw WeightNotSupported("the trace path is implemented for w = 1 only");
  }
  const BasisPair basis = solve_basis(problem, options.basis_intervals, options);
  const int order = options.trace_panel_order;
  const int panels = (nodes + order - 1) / order;
  nodes_ = panels * order;
  coarse_ = symmetric_spectrum(
      basis, composite_gauss_legendre(problem.a, problem.b, panels, order));
  fine_ = symmetric_spectrum(
      basis, composite_gauss_legendre(problem.a, problem.b, 2 * panels, order));
}

double NystromTrace::coarse_trace(int n) const { return power_sum(coarse_, n); }
double NystromTrace::fine_trace(int n) const { return power_sum(fine_, n); }

ZetaResult NystromTrace::zeta(int n) const {
  if (n < 2) throw std::invalid_argument("the trace path needs n >= 2");
  const double coarse = coarse_trace(n);
  const double fine = fine_trace(n);
  ZetaResult out;
  out.n = n;
  out.method = Method::trace;
  out.value = fine + (fine - coarse) / 3.0;
  out.error_estimate = std::abs(fine - coarse) / 3.0;
  out.grid_size = nodes_;
  return out;
}

ZetaResult zeta_by_trace(const Problem& problem, int n, int nodes,
                         const SolverOptions& options) {
  if (n < 2) throw std::invalid_argument("the trace path needs n >= 2");
  return NystromTrace(problem, nodes, options).zeta(n);
}

}  // namespace slzeta::sl
