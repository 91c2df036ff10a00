#pragma once

#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "slzeta/sl/basis.hpp"
#include "slzeta/sl/options.hpp"
#include "slzeta/sl/problem.hpp"
#include "slzeta/sl/quadrature.hpp"
#include "slzeta/sl/spectrum.hpp"

namespace slzeta::sl {

enum class Method { theorem, trace, eigen };

std::string_view to_string(Method method);

/// zeta_T(n) = sum_k (lambda_k - shift)^(-n) from one of the three paths.
struct ZetaResult {
  int n = 0;
  double value = 0.0;
  Method method = Method::eigen;
  double error_estimate = 0.0;
  int grid_size = 0;  // basis intervals, Nystrom nodes or eigenvalue count
};

// ---- eigenvalue sum --------------------------------------------------------

/// Head sum over the slice plus a Weyl-law tail. The tail follows the model
/// mu_k = A (k + c)^2 + d with A = pi^2 / weyl_constant and c, d fitted to
/// the last two eigenvalues; the error estimate adds its distance from the
/// bare leading term A k^2, the Euler-Maclaurin remainder and the effect of
/// the eigenvalue tolerance.
ZetaResult zeta_from_spectrum(const SpectrumSlice& spectrum, double shift,
                              int n);

ZetaResult zeta_by_eigen(const Problem& problem, int n, int count,
                         const SolverOptions& options = {});

/// sum_{k > K} (A (k + c)^2 + d)^(-n), explicit for a stretch past K and
/// Euler-Maclaurin with the f/2 and f'/12 corrections beyond.
double weyl_tail(double a_coeff, double c, double d, int n, int count,
                 double* remainder = nullptr);

// ---- Nystrom trace ---------------------------------------------------------

/// K_ij = G(x_i, x_j) w_j on the given rule.
Eigen::MatrixXd nystrom_matrix(const BasisPair& basis,
                               const QuadratureRule& rule);

/// Spectra of the symmetrised Nystrom matrices on `nodes` and 2*`nodes`
/// composite Gauss-Legendre points; trace(K^n) is the n-th power sum.
/// Needs w = 1.
class NystromTrace {
 public:
  NystromTrace(const Problem& problem, int nodes,
               const SolverOptions& options = {});

  int nodes() const noexcept { return nodes_; }
  double coarse_trace(int n) const;
  double fine_trace(int n) const;

  /// Richardson extrapolation of the two traces assuming an h^2 error;
  /// the estimate is |fine - coarse| / 3. Requires n >= 2.
  ZetaResult zeta(int n) const;

 private:
  int nodes_ = 0;
  std::vector<double> coarse_;
  std::vector<double> fine_;
};

ZetaResult zeta_by_trace(const Problem& problem, int n, int nodes,
                         const SolverOptions& options = {});

// ---- pair sum over admissible classes --------------------------------------

/// Nested simplex integral over a <= x_1 <= ... <= x_n <= b of
/// prod_m psi_-^{a_m}(x_m) psi_+^{2 - a_m}(x_m) on the basis grid with
/// `cell_order`-point cells. Exposed for tests.
double simplex_integral(const BasisPair& basis, std::span<const int> exponents,
                        int cell_order);

/// (-1)^n n / W^n * sum over n-admissible (V, P) of c_n(V;P) I(V, P).
/// Requires n >= 2 and w = 1.
ZetaResult zeta_by_theorem(const BasisPair& basis, int n,
                           const SolverOptions& options = {});

ZetaResult zeta_by_theorem(const Problem& problem, int n,
                           const SolverOptions& options = {});

}  // namespace slzeta::sl
