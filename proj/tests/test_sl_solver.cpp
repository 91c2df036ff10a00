#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "slzeta/circular_perms.hpp"
#include "slzeta/exact_zeta.hpp"
#include "slzeta/sl/zeta.hpp"

using namespace slzeta;
using namespace slzeta::sl;
using doctest::Approx;

namespace {

constexpr double pi = std::numbers::pi;

double rel(double value, double reference) {
  return std::abs(value - reference) / std::abs(reference);
}

Problem dirichlet_shifted(double shift) {
  Problem p = models::dirichlet_on_pi();
  p.shift = shift;
  return p;
}

// sum_{k >= 1} (k^2 - shift)^(-n) by brute force with an integral tail.
double dirichlet_series(double shift, int n) {
  const int terms = 200000;
  double sum = 0.0;
  for (int k = terms; k >= 1; --k) {
    sum += std::pow(static_cast<double>(k) * k - shift, -n);
  }
  return sum + std::pow(terms + 0.5, 1.0 - 2.0 * n) / (2.0 * n - 1.0);
}

// Variable coefficients with a Robin condition at a.
Problem robin_problem() {
  Problem p;
  p.a = 0.0;
  p.b = 2.0;
  p.p = [](double x) { return 1.0 + 0.5 * x * x; };
  p.q = [](double x) { return std::exp(-x); };
  p.w = [](double) { return 1.0; };
  p.alpha = 0.6;
  p.beta = 0.0;
  return p;
}

}  // namespace

TEST_CASE("quadrature rules") {
  for (int order = 1; order <= 10; ++order) {
    const auto rule = gauss_legendre(order);
    // Exact for polynomials up to degree 2 order - 1.
    for (int deg = 0; deg <= 2 * order - 1; ++deg) {
      double sum = 0.0;
      for (std::size_t i = 0; i < rule.size(); ++i) {
        sum += rule.weights[i] * std::pow(rule.nodes[i], deg);
      }
      const double exact = deg % 2 == 1 ? 0.0 : 2.0 / (deg + 1);
      CHECK(sum == Approx(exact).epsilon(1e-14));
    }
    CHECK(std::is_sorted(rule.nodes.begin(), rule.nodes.end()));
  }
  const auto composite = composite_gauss_legendre(0.0, pi, 10, 4);
  double sum = 0.0;
  for (std::size_t i = 0; i < composite.size(); ++i) {
    sum += composite.weights[i] * std::sin(composite.nodes[i]);
  }
  CHECK(sum == Approx(2.0).epsilon(1e-9));

  // Cumulative matrix integrates x^3 from -1 to each node exactly.
  const auto rule = gauss_legendre(4);
  const auto m = cumulative_integration_matrix(rule);
  for (std::size_t r = 0; r < 4; ++r) {
    double sum3 = 0.0;
    for (std::size_t s = 0; s < 4; ++s) sum3 += m[r * 4 + s] * std::pow(rule.nodes[s], 3);
    CHECK(sum3 == Approx((std::pow(rule.nodes[r], 4) - 1.0) / 4.0).epsilon(1e-13));
  }
}

TEST_CASE("problem validation") {
  Problem p = models::mixed_unit();
  CHECK_NOTHROW(validate(p));
  CHECK(has_unit_weight(p));
  CHECK(weyl_constant(p) == Approx(1.0));
  CHECK(weyl_constant(models::dirichlet_on_pi()) == Approx(pi * pi));

  Problem bad = p;
  bad.b = -1.0;
  CHECK_THROWS_AS(validate(bad), InvalidProblem);
  bad = p;
  bad.alpha = pi;
  CHECK_THROWS_AS(validate(bad), InvalidProblem);
  bad = p;
  bad.p = [](double x) { return x - 0.5; };
  CHECK_THROWS_AS(validate(bad), SingularCoefficient);
  bad = p;
  bad.w = [](double) { return 0.0; };
  CHECK_THROWS_AS(validate(bad), SingularCoefficient);
  bad = p;
  bad.w = [](double x) { return 1.0 + x; };
  CHECK_FALSE(has_unit_weight(bad));
}

TEST_CASE("basis for the mixed model") {
  const auto basis = solve_basis(models::mixed_unit(), 64);
  CHECK(basis.wronskian() == Approx(-1.0).epsilon(1e-13));
  for (double x : {0.0, 0.13, 0.5, 0.77, 1.0}) {
    CHECK(basis.psi_minus(x) == Approx(x).epsilon(1e-13));
    CHECK(basis.psi_plus(x) == Approx(1.0).epsilon(1e-13));
    CHECK(basis.quasi_minus(x) == Approx(1.0).epsilon(1e-13));
  }
  CHECK(basis.green(0.3, 0.7) == Approx(0.3).epsilon(1e-13));
  CHECK(basis.green(0.7, 0.3) == Approx(0.3).epsilon(1e-13));
  CHECK(basis.unit_weight());
}

TEST_CASE("basis for Dirichlet on (0, pi)") {
  const auto basis = solve_basis(models::dirichlet_on_pi(), 64);
  CHECK(std::abs(basis.wronskian()) == Approx(pi).epsilon(1e-12));
  for (double x : {0.0, 0.4, 1.7, 3.0}) {
    CHECK(basis.psi_minus(x) == Approx(x).epsilon(1e-12));
    CHECK(std::abs(basis.psi_plus(x)) == Approx(pi - x).epsilon(1e-12));
  }
  CHECK(basis.green(pi / 2, pi / 2) == Approx(pi / 4).epsilon(1e-12));
  for (double s : {0.2, 1.0, 2.5}) {
    for (double t : {0.1, 1.3, 3.1}) {
      const double expected = std::min(s, t) * (pi - std::max(s, t)) / pi;
      CHECK(basis.green(s, t) == Approx(expected).epsilon(1e-12));
    }
  }
}

TEST_CASE("Wronskian constancy, symmetry and boundary conditions") {
  for (const Problem& problem :
       {models::linear_potential(), robin_problem(), models::mixed_unit()}) {
    const auto basis = solve_basis(problem, 256);
    CHECK(basis.wronskian_drift() <= 1e-10);
    CHECK(basis.ode_error() <= 1e-12);
    const auto last = static_cast<std::size_t>(basis.intervals());
    CHECK(rel(basis.wronskian_at(last), basis.wronskian_at(0)) <= 1e-10);
    CHECK(std::abs(basis.psi_minus(problem.a) - std::sin(problem.alpha)) < 1e-15);
    CHECK(std::abs(basis.quasi_plus(problem.b) - std::cos(problem.beta)) < 1e-15);

    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(problem.a, problem.b);
    for (int i = 0; i < 200; ++i) {
      const double s = u(rng);
      const double t = u(rng);
      CHECK(basis.green(s, t) == basis.green(t, s));
      CHECK(std::abs(basis.boundary_residual_a(s)) <= 1e-8);
      CHECK(std::abs(basis.boundary_residual_b(s)) <= 1e-8);
    }
  }
}

TEST_CASE("Green function solves the ODE as an integral operator") {
  // For the mixed model, u(s) = int G(s,t) f(t) dt solves -u'' = f with
  // u(0) = u'(1) = 0. With f = 1: u = s - s^2/2.
  const auto basis = solve_basis(models::mixed_unit(), 64);
  const auto rule = composite_gauss_legendre(0.0, 1.0, 8, 8);
  for (double s : {0.1, 0.5, 0.9}) {
    double u = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
      u += rule.weights[i] * basis.green(s, rule.nodes[i]);
    }
    CHECK(u == Approx(s - s * s / 2).epsilon(1e-3));
  }
}

TEST_CASE("basis errors") {
  CHECK_THROWS_AS(solve_basis(dirichlet_shifted(1.0), 256), EigenvalueShiftCollision);
  CHECK_THROWS_AS(solve_basis(dirichlet_shifted(4.0), 256), EigenvalueShiftCollision);
  CHECK_NOTHROW(solve_basis(dirichlet_shifted(2.5), 256));
  const auto basis = solve_basis(models::mixed_unit(), 64);
  CHECK_THROWS_AS(basis.green(-0.1, 0.5), OutOfDomain);
  CHECK_THROWS_AS(basis.psi_plus(1.5), OutOfDomain);
  Problem singular = models::mixed_unit();
  singular.p = [](double x) { return x; };
  CHECK_THROWS_AS(solve_basis(singular, 64), SingularCoefficient);
  CHECK_THROWS_AS(solve_basis(models::mixed_unit(), 8), std::invalid_argument);
}

TEST_CASE("eigenvalues of the model problems") {
  const auto mixed = eigenvalues(models::mixed_unit(), 3);
  REQUIRE(mixed.count() == 3);
  for (int k = 1; k <= 3; ++k) {
    CHECK(rel(mixed.eigenvalues[static_cast<std::size_t>(k - 1)],
              std::pow((k - 0.5) * pi, 2)) <= 1e-10);
  }
  const auto dir = eigenvalues(models::dirichlet_on_pi(), 3);
  for (int k = 1; k <= 3; ++k) {
    CHECK(rel(dir.eigenvalues[static_cast<std::size_t>(k - 1)], k * k) <= 1e-10);
  }
  Problem unit = models::dirichlet_on_pi();
  unit.b = 1.0;
  const auto scaled = eigenvalues(unit, 50);
  for (int k = 1; k <= 50; ++k) {
    CHECK(rel(scaled.eigenvalues[static_cast<std::size_t>(k - 1)] / (k * k),
              pi * pi) <= 1e-9);
  }
}

TEST_CASE("eigenvalues with a weight and a Neumann end") {
  Problem weighted = models::dirichlet_on_pi();
  weighted.w = [](double) { return 4.0; };
  const auto w = eigenvalues(weighted, 5);
  for (int k = 1; k <= 5; ++k) {
    CHECK(rel(w.eigenvalues[static_cast<std::size_t>(k - 1)], k * k / 4.0) <= 1e-10);
  }
  Problem neumann = models::dirichlet_on_pi();
  neumann.alpha = pi / 2;
  neumann.beta = pi / 2;
  const auto nn = eigenvalues(neumann, 4);
  CHECK(std::abs(nn.eigenvalues[0]) <= 1e-9);
  for (int k = 2; k <= 4; ++k) {
    CHECK(rel(nn.eigenvalues[static_cast<std::size_t>(k - 1)], (k - 1) * (k - 1)) <= 1e-10);
  }
  CHECK_THROWS_AS(zeta_by_eigen(neumann, 2, 20), ZeroEigenvalue);
}

TEST_CASE("eigenvalues are increasing and follow Weyl's law") {
  for (const Problem& problem : {models::linear_potential(), robin_problem()}) {
    const auto slice = eigenvalues(problem, 100);
    CHECK(std::adjacent_find(slice.eigenvalues.begin(), slice.eigenvalues.end(),
                             std::greater_equal<>()) == slice.eigenvalues.end());
    const double ratio = slice.eigenvalues.back() / (100.0 * 100.0);
    CHECK(rel(ratio, pi * pi / slice.weyl_constant) <= 0.05);
  }
}

TEST_CASE("eigenvalue counting agrees with shooting") {
  const Problem problem = robin_problem();
  const auto slice = eigenvalues(problem, 10);
  const PruferShooter shooter(problem, SolverOptions{});
  for (std::size_t k = 0; k < 10; ++k) {
    CHECK(shooter.count_below(slice.eigenvalues[k] * (1 - 1e-6) - 1e-9) ==
          static_cast<int>(k));
    CHECK(shooter.count_below(slice.eigenvalues[k] * (1 + 1e-6) + 1e-9) ==
          static_cast<int>(k + 1));
  }
}

TEST_CASE("eigen path") {
  const auto r = zeta_by_eigen(models::mixed_unit(), 2, 100);
  CHECK(r.method == Method::eigen);
  CHECK(r.grid_size == 100);
  CHECK(rel(r.value, 1.0 / 6) <= 1e-8);

  const auto d1 = zeta_by_eigen(models::dirichlet_on_pi(), 1, 10000);
  CHECK(std::abs(d1.value - pi * pi / 6) <= d1.error_estimate);
  CHECK(d1.error_estimate < 1e-6);
  const auto d3 = zeta_by_eigen(models::dirichlet_on_pi(), 3, 200);
  CHECK(rel(d3.value, std::pow(pi, 6) / 945) <= 1e-10);

  Problem weighted = models::dirichlet_on_pi();
  weighted.w = [](double) { return 4.0; };
  const auto w2 = zeta_by_eigen(weighted, 2, 200);
  CHECK(rel(w2.value, 16 * std::pow(pi, 4) / 90) <= 1e-10);
}

TEST_CASE("eigen tail covers truncation for several shifts") {
  for (double shift : {-1.0, 0.5, 2.0}) {
    const auto problem = dirichlet_shifted(shift);
    for (int n = 1; n <= 3; ++n) {
      const auto r = zeta_by_eigen(problem, n, 300);
      const double truth = dirichlet_series(shift, n);
      CHECK(std::abs(r.value - truth) <= r.error_estimate + 1e-12 * std::abs(truth));
    }
  }
}

TEST_CASE("Weyl tail against a direct sum") {
  double remainder = 0.0;
  const double tail = weyl_tail(1.0, 0.0, 0.0, 2, 100, &remainder);
  double direct = 0.0;
  for (int k = 2000000; k > 100; --k) direct += std::pow(static_cast<double>(k), -4);
  direct += std::pow(2000000.5, -3) / 3;
  CHECK(rel(tail, direct) <= 1e-10);
  CHECK(remainder >= 0.0);
}

TEST_CASE("Nystrom matrix identities") {
  const auto basis = solve_basis(models::linear_potential(), 128);
  const auto rule = composite_gauss_legendre(0.0, 1.0, 10, 4);
  const auto k = nystrom_matrix(basis, rule);
  REQUIRE(k.rows() == 40);
  const double tr2 = (k * k).trace();
  double sum = 0.0;
  for (Eigen::Index i = 0; i < k.rows(); ++i) {
    for (Eigen::Index j = 0; j < k.cols(); ++j) sum += k(i, j) * k(j, i);
  }
  CHECK(tr2 == Approx(sum).epsilon(1e-13));
  CHECK(tr2 >= 0.0);

  const NystromTrace trace(models::linear_potential(), 40);
  CHECK(trace.coarse_trace(2) == Approx(tr2).epsilon(1e-11));
  CHECK(trace.coarse_trace(3) == Approx((k * k * k).trace()).epsilon(1e-11));
}

TEST_CASE("trace path") {
  const auto r = zeta_by_trace(models::mixed_unit(), 4, 400);
  CHECK(r.method == Method::trace);
  CHECK(rel(r.value, 17.0 / 630) <= 1e-4);
  CHECK(r.error_estimate >= 0.0);

  const NystromTrace dir(models::dirichlet_on_pi(), 200);
  CHECK(rel(dir.zeta(2).value, std::pow(pi, 4) / 90) <= 1e-4);
  CHECK(rel(dir.zeta(3).value, std::pow(pi, 6) / 945) <= 1e-4);
  CHECK_THROWS_AS(dir.zeta(1), std::invalid_argument);

  Problem weighted = models::mixed_unit();
  weighted.w = [](double x) { return 1.0 + x; };
  CHECK_THROWS_AS(zeta_by_trace(weighted, 2, 50), WeightNotSupported);
}

TEST_CASE("simplex integrals for monomial bases") {
  // psi_- = x, psi_+ = 1 on [0,1]: the nested integral of prod x_m^{a_m}
  // over 0 <= x_1 <= ... <= x_n <= 1 is prod_m 1 / (a_1 + ... + a_m + m).
  const auto basis = solve_basis(models::mixed_unit(), 64);
  const std::vector<std::vector<int>> cases = {
      {2, 0}, {2, 1, 0}, {2, 2, 0, 0}, {2, 1, 1, 0}, {2, 0, 2, 1, 0}, {1, 1, 1}};
  for (const auto& exps : cases) {
    double expected = 1.0;
    int partial = 0;
    for (std::size_t m = 0; m < exps.size(); ++m) {
      partial += exps[m];
      expected /= partial + static_cast<int>(m) + 1;
    }
    CHECK(simplex_integral(basis, exps, 8) == Approx(expected).epsilon(1e-13));
  }
}

TEST_CASE("theorem path") {
  const auto basis = solve_basis(models::mixed_unit(), 128);
  CHECK(rel(zeta_by_theorem(basis, 2).value, 1.0 / 6) <= 1e-12);
  CHECK(rel(zeta_by_theorem(basis, 4).value, 17.0 / 630) <= 1e-12);
  for (int n = 5; n <= 8; ++n) {
    CHECK(rel(zeta_by_theorem(basis, n).value, exact::zeta_T_exact(n).get_d()) <= 1e-11);
  }
  CHECK_THROWS_AS(zeta_by_theorem(basis, 1), std::invalid_argument);

  const auto dir = zeta_by_theorem(models::dirichlet_on_pi(), 3);
  CHECK(dir.method == Method::theorem);
  CHECK(rel(dir.value, std::pow(pi, 6) / 945) <= 1e-10);

  for (int n = 2; n <= 4; ++n) {
    const auto shifted = zeta_by_theorem(dirichlet_shifted(-1.0), n);
    CHECK(rel(shifted.value, dirichlet_series(-1.0, n)) <= 1e-9);
  }
}

TEST_CASE("three paths agree on a Robin problem") {
  const Problem problem = robin_problem();
  const auto spectrum = eigenvalues(problem, 1000);
  const NystromTrace trace(problem, 300);
  for (int n = 2; n <= 4; ++n) {
    const double t = zeta_by_theorem(problem, n).value;
    const double r = trace.zeta(n).value;
    const double e = zeta_from_spectrum(spectrum, problem.shift, n).value;
    CHECK(rel(t, e) <= 1e-8);
    CHECK(rel(r, e) <= 1e-4);
  }
}

TEST_CASE("members of one class give the same Green product") {
  const auto basis = solve_basis(models::linear_potential(), 128);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const int n = 6;
  for (const auto& c : perms::enumerate_admissible_pairs(n)) {
    const auto members = perms::enumerate_class(n, c.vales, c.pinnacles);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<double> x(n);
      for (double& xi : x) xi = u(rng);
      std::sort(x.begin(), x.end());
      auto product = [&](const perms::CircularPermutation& sigma) {
        double prod = 1.0;
        for (int i = 1; i <= n; ++i) {
          prod *= basis.green(x[static_cast<std::size_t>(sigma(i) - 1)],
                              x[static_cast<std::size_t>(sigma(i + 1) - 1)]);
        }
        return prod;
      };
      const double first = product(members.front());
      for (const auto& sigma : members) {
        REQUIRE(product(sigma) == Approx(first).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("results do not depend on call order") {
  const Problem problem = models::linear_potential();
  const auto a = zeta_by_theorem(problem, 3);
  (void)zeta_by_trace(problem, 3, 50);
  const auto b = zeta_by_theorem(problem, 3);
  CHECK(a.value == b.value);
  CHECK(to_string(Method::theorem) == "theorem");
  CHECK(to_string(Method::trace) == "trace");
  CHECK(to_string(Method::eigen) == "eigen");
}
