#pragma once

#include <vector>

#include "slzeta/rational.hpp"

// Exact values for the model problem -u'' = lambda u on [0,1] with
// u(0) = u'(1) = 0, whose eigenvalues are ((k - 1/2) pi)^2. Its zeta values
// are rational, and they give zeta(2n) / pi^(2n) and B_(2n).
namespace slzeta::exact {

struct ExactZetaValue {
  int n = 0;
  Rational zeta_t;           // sum_k ((k - 1/2) pi)^(-2n)
  Rational zeta_even_coeff;  // zeta(2n) / pi^(2n)
  Rational bernoulli;        // B_(2n)
};

/// n * sum over n-admissible pairs of c_n(V;P) * prod_m 1/(2m + N_PV(m+1)).
/// n = 1 has no pair structure and returns the closed form 1/2.
Rational zeta_T_exact(int n);

/// zeta(2n) / pi^(2n) = zeta_T_exact(n) / (2^(2n) - 1).
Rational zeta_even(int n);

/// The pair sum
///   sum_(V,P) 2^(-#P) prod_{p in P\{n}} C(N(p),2) prod_{r plain} N(r)
///             prod_{m=1..n} 1/(2m + N(m+1)).
Rational pair_sum(int n);

/// B_(2n) from the pair sum:
///   (-1)^(n+1) n (2n)! / (2^n (2^(2n) - 1)) * pair_sum(n),   n >= 2.
Rational bernoulli_via_pairs(int n);

/// B_m from sum_{j=0..m} C(m+1, j) B_j = 0, B_0 = 1 (so B_1 = -1/2).
Rational bernoulli_oracle(int m);

/// B_0..B_m in one pass of the same recurrence.
std::vector<Rational> bernoulli_table(int m);

ExactZetaValue evaluate(int n);

}  // namespace slzeta::exact
