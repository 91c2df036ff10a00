#include <array>
#include <cmath>

#include "slzeta/circular_perms.hpp"
#include "slzeta/sl/zeta.hpp"

namespace slzeta::sl {

namespace {

// Cells of the basis grid, each with an `order`-point Gauss-Legendre rule.
// factor[e] holds psi_-^e psi_+^(2-e) at every node.
struct CellGrid {
  int cells = 0;
  int order = 0;
  std::vector<double> weights;   // scaled to a cell
  std::vector<double> integral;  // cumulative matrix scaled to a cell
  std::array<std::vector<double>, 3> factor;
};

CellGrid make_grid(const BasisPair& basis, int cells, int order) {
  const QuadratureRule ref = gauss_legendre(order);
  const std::vector<double> cumulative = cumulative_integration_matrix(ref);
  CellGrid g;
  g.cells = cells;
  g.order = order;
  const double h = (basis.b() - basis.a()) / cells;
  for (double w : ref.weights) g.weights.push_back(0.5 * h * w);
  for (double s : cumulative) g.integral.push_back(0.5 * h * s);
  const auto total = static_cast<std::size_t>(cells) * ref.size();
  for (auto& f : g.factor) f.resize(total);
  for (int c = 0; c < cells; ++c) {
    const double left = basis.a() + c * h;
    for (std::size_t r = 0; r < ref.size(); ++r) {
      const double x = left + 0.5 * h * (ref.nodes[r] + 1.0);
      const double m = basis.psi_minus(x);
      const double p = basis.psi_plus(x);
      const std::size_t idx = static_cast<std::size_t>(c) * ref.size() + r;
      g.factor[0][idx] = p * p;
      g.factor[1][idx] = m * p;
      g.factor[2][idx] = m * m;
    }
  }
  return g;
}

// F on the cell nodes, F(b), and the running class-number weight.
struct Partial {
  std::vector<double> values;
  double total = 0.0;
  double weight = 1.0;
};

// new F(t) = int_a^t factor[e](s) old F(s) ds; an empty `values` means F = 1.
Partial integrate(const CellGrid& g, const Partial& parent, int exponent) {
  const auto order = static_cast<std::size_t>(g.order);
  const std::vector<double>& factor =
      g.factor[static_cast<std::size_t>(exponent)];
  Partial out;
  out.weight = parent.weight;
  out.values.resize(factor.size());
  std::vector<double> integrand(order);
  double start = 0.0;
  for (std::size_t c = 0; c < static_cast<std::size_t>(g.cells); ++c) {
    const std::size_t base = c * order;
    for (std::size_t s = 0; s < order; ++s) {
      integrand[s] = factor[base + s] *
                     (parent.values.empty() ? 1.0 : parent.values[base + s]);
    }
    double end = start;
    for (std::size_t r = 0; r < order; ++r) {
      double acc = 0.0;
      for (std::size_t s = 0; s < order; ++s) {
        acc += g.integral[r * order + s] * integrand[s];
      }
      out.values[base + r] = start + acc;
      end += g.weights[r] * integrand[r];
    }
    start = end;
  }
  out.total = start;
  return out;
}

int exponent_of(perms::Role role) {
  switch (role) {
    case perms::Role::vale:
      return 2;
    case perms::Role::pinnacle:
      return 0;
    case perms::Role::plain:
      return 1;
  }
  return 1;
}

// sum over admissible pairs of c_n(V;P) I(V,P), sharing prefix integrals.
double class_weighted_sum(const CellGrid& g, int n) {
  double sum = 0.0;
  perms::walk_admissible(
      n, Partial{},
      [&](const Partial& parent, const perms::Step& s) {
        Partial next = integrate(g, parent, exponent_of(s.role));
        const double level = s.level_before;
        if (s.role == perms::Role::vale && s.value > 1) next.weight *= 2.0;
        if (s.role == perms::Role::plain) next.weight *= 2.0 * level;
        if (s.role == perms::Role::pinnacle && s.value < n) {
          next.weight *= 0.5 * level * (level - 1.0);
        }
        return next;
      },
      [&](const Partial& leaf) { sum += leaf.weight * leaf.total; });
  return sum;
}

}  // namespace

double simplex_integral(const BasisPair& basis, std::span<const int> exponents,
                        int cell_order) {
  const CellGrid g = make_grid(basis, basis.intervals(), cell_order);
  Partial state;
  for (int e : exponents) {
    if (e < 0 || e > 2) throw std::invalid_argument("exponent must be 0, 1 or 2");
    state = integrate(g, state, e);
  }
  return state.total;
}

ZetaResult zeta_by_theorem(const BasisPair& basis, int n,
                           const SolverOptions& options) {
  if (n < 2) throw std::invalid_argument("the theorem path needs n >= 2");
  if (!basis.unit_weight()) {
    throw WeightNotSupported("the theorem path is implemented for w = 1 only");
  }
  const int cells = basis.intervals();
  const double fine =
      class_weighted_sum(make_grid(basis, cells, options.cell_order), n);
  const double coarse =
      class_weighted_sum(make_grid(basis, cells / 2, options.cell_order), n);
  const double prefactor = n * std::pow(-1.0 / basis.wronskian(), n);

  ZetaResult out;
  out.n = n;
  out.method = Method::theorem;
  out.value = prefactor * fine;
  out.error_estimate = std::abs(prefactor) * std::abs(fine - coarse) +
                       n * basis.ode_error() * std::abs(out.value);
  out.grid_size = cells;
  return out;
}

ZetaResult zeta_by_theorem(const Problem& problem, int n,
                           const SolverOptions& options) {
  if (n < 2) throw std::invalid_argument("the theorem path needs n >= 2");
  if (!has_unit_weight(problem)) {
    throw WeightNotSupported("the theorem path is implemented for w = 1 only");
  }
  return zeta_by_theorem(solve_basis(problem, options.basis_intervals, options),
                         n, options);
}

}  // namespace slzeta::sl
