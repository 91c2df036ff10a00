#include "slzeta/exact_zeta.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "slzeta/circular_perms.hpp"

namespace slzeta::exact {

namespace {

using perms::Role;
using perms::Step;

// prod_m 1/(2m + h_m) over a walk is accumulated as an integer against the
// fixed denominator prod_m L_m, with L_m = lcm over reachable heights h of
// (2m + h). scale[m][h] = L_m / (2m + h).
struct DenominatorTable {
  std::vector<std::vector<BigInt>> scale;
  BigInt common = 1;
};

DenominatorTable make_table(int n) {
  DenominatorTable t;
  t.scale.resize(static_cast<std::size_t>(n) + 1);
  for (int m = 1; m <= n; ++m) {
    const int top = std::min(m, n - m);
    BigInt lcm = 1;
    for (int h = 0; h <= top; ++h) {
      mpz_lcm_ui(lcm.get_mpz_t(), lcm.get_mpz_t(),
                 static_cast<unsigned long>(2 * m + h));
    }
    auto& row = t.scale[static_cast<std::size_t>(m)];
    for (int h = 0; h <= top; ++h) row.push_back(lcm / (2 * m + h));
    t.common *= lcm;
  }
  return t;
}

const BigInt& scale_of(const DenominatorTable& t, const Step& s) {
  return t.scale[static_cast<std::size_t>(s.value)]
                [static_cast<std::size_t>(s.level_after)];
}

void require_n(int n, int lowest, const char* what) {
  if (n < lowest) {
    throw std::invalid_argument(std::string(what) + " needs n >= " +
                                std::to_string(lowest));
  }
}

}  // namespace

Rational zeta_T_exact(int n) {
  require_n(n, 1, "zeta_T_exact");
  if (n == 1) return Rational(1, 2);

  const DenominatorTable table = make_table(n);
  BigInt total = 0;
  // Class number as a product of per-value factors: each vale past 1 and
  // each plain value r carry the 2^(n-k-1), plain r also N(r), and a
  // pinnacle p < n carries C(N(p), 2).
  perms::walk_admissible(
      n, BigInt(1),
      [&](const BigInt& parent, const Step& s) {
        BigInt next = parent * scale_of(table, s);
        const unsigned long level = static_cast<unsigned long>(s.level_before);
        if (s.role == Role::vale && s.value > 1) next *= 2;
        if (s.role == Role::plain) next *= 2 * level;
        if (s.role == Role::pinnacle && s.value < n) {
          next *= level * (level - 1) / 2;
        }
        return next;
      },
      [&](const BigInt& leaf) { total += leaf; });

  Rational out(BigInt(total * n), table.common);
  out.canonicalize();
  return out;
}

Rational zeta_even(int n) {
  require_n(n, 1, "zeta_even");
  Rational out = zeta_T_exact(n) / Rational(pow2(2UL * n) - 1);
  out.canonicalize();
  return out;
}

Rational pair_sum(int n) {
  require_n(n, 2, "pair_sum");
  const DenominatorTable table = make_table(n);
  BigInt total = 0;
  // 2^(-#P) is carried as 2^(n - #P) on the numerator (a factor 2 on every
  // vale and plain value) against 2^n in the denominator.
  perms::walk_admissible(
      n, BigInt(1),
      [&](const BigInt& parent, const Step& s) {
        BigInt next = parent * scale_of(table, s);
        const unsigned long level = static_cast<unsigned long>(s.level_before);
        switch (s.role) {
          case Role::vale:
            next *= 2;
            break;
          case Role::plain:
            next *= 2 * level;
            break;
          case Role::pinnacle:
            if (s.value < n) next *= level * (level - 1) / 2;
            break;
        }
        return next;
      },
      [&](const BigInt& leaf) { total += leaf; });

  Rational out(total, table.common * pow2(static_cast<unsigned long>(n)));
  out.canonicalize();
  return out;
}

Rational bernoulli_via_pairs(int n) {
  require_n(n, 2, "bernoulli_via_pairs");
  const auto un = static_cast<unsigned long>(n);
  Rational prefactor(BigInt(n * factorial(2 * un)),
                     BigInt(pow2(un) * (pow2(2 * un) - 1)));
  prefactor.canonicalize();
  if (n % 2 == 0) prefactor = -prefactor;
  Rational out = prefactor * pair_sum(n);
  out.canonicalize();
  return out;
}

std::vector<Rational> bernoulli_table(int m) {
  if (m < 0) throw std::invalid_argument("bernoulli index must be >= 0");
  std::vector<Rational> b;
  b.reserve(static_cast<std::size_t>(m) + 1);
  b.emplace_back(1);
  for (int j = 1; j <= m; ++j) {
    Rational acc = 0;
    for (int i = 0; i < j; ++i) {
      acc += Rational(binomial(static_cast<unsigned long>(j) + 1,
                               static_cast<unsigned long>(i))) *
             b[static_cast<std::size_t>(i)];
    }
    Rational bj = -acc / Rational(j + 1);
    bj.canonicalize();
    b.push_back(bj);
  }
  return b;
}

Rational bernoulli_oracle(int m) {
  return bernoulli_table(m).back();
}

ExactZetaValue evaluate(int n) {
  ExactZetaValue out;
  out.n = n;
  out.zeta_t = zeta_T_exact(n);
  out.zeta_even_coeff = out.zeta_t / Rational(pow2(2UL * n) - 1);
  out.zeta_even_coeff.canonicalize();
  out.bernoulli = n >= 2 ? bernoulli_via_pairs(n) : bernoulli_oracle(2 * n);
  return out;
}

}  // namespace slzeta::exact
