#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "slzeta/error.hpp"
#include "slzeta/rational.hpp"

namespace slzeta::perms {

/// Ascending set of values in [n].
using ValueSet = std::vector<int>;

inline constexpr int kDefaultBruteForceCeiling = 10;

class BruteForceTooLarge : public Error {
 public:
  BruteForceTooLarge(int n, int ceiling);
  int n() const noexcept { return n_; }
  int ceiling() const noexcept { return ceiling_; }

 private:
  int n_;
  int ceiling_;
};

/// A permutation of 1..n read cyclically. Any rotation may be passed in;
/// the stored word is the rotation that starts with 1.
class CircularPermutation {
 public:
  explicit CircularPermutation(std::vector<int> word);

  int size() const noexcept { return static_cast<int>(word_.size()); }
  std::span<const int> word() const noexcept { return word_; }

  /// Value at circular position i, 1-based: position 0 is position n and
  /// position n+1 is position 1.
  int operator()(int i) const;

  friend auto operator<=>(const CircularPermutation&,
                          const CircularPermutation&) = default;

 private:
  std::vector<int> word_;
};

struct PeakSets {
  ValueSet vales;
  ValueSet pinnacles;

  friend auto operator<=>(const PeakSets&, const PeakSets&) = default;
};

PeakSets pinnacles_vales(const CircularPermutation& perm);

/// Same scan on a raw word (any rotation, values 1..n).
PeakSets pinnacles_vales(std::span<const int> word);

/// Calls `visit` with every circular n-permutation exactly once, as the
/// word starting with 1, in lexicographic order.
void for_each_circular_permutation(
    int n, const std::function<void(std::span<const int>)>& visit);

/// Brute force: all circular n-permutations with exactly these vales and
/// pinnacles, sorted.
std::vector<CircularPermutation> enumerate_class(
    int n, const ValueSet& vales, const ValueSet& pinnacles,
    int ceiling = kDefaultBruteForceCeiling);

/// Brute force partition of all (n-1)! circular n-permutations by their
/// (V, P) sets.
std::map<PeakSets, std::uint64_t> partition_by_peak_sets(
    int n, int ceiling = kDefaultBruteForceCeiling);

bool is_admissible(int n, const ValueSet& vales, const ValueSet& pinnacles);

/// N_PV(alpha) = #{v in V : v < alpha} - #{p in P : p < alpha}.
int n_pv(const ValueSet& vales, const ValueSet& pinnacles, int alpha);

/// Closed form 2^(n-k-1) * prod_{p in P\{n}} C(N(p),2) * prod_{r plain} N(r);
/// zero when the pair is not n-admissible.
BigInt class_number(int n, const ValueSet& vales, const ValueSet& pinnacles);

struct PinnacleValeClass {
  int n = 0;
  ValueSet vales;
  ValueSet pinnacles;
  int k = 0;
  ValueSet reduced_q;  // P \ {n}
  ValueSet reduced_w;  // V \ {1}
  std::vector<int> exponents;  // a_1..a_n: 2 on vales, 0 on pinnacles, 1 else
  BigInt class_number;
};

/// Builds the class record; throws std::invalid_argument if (V, P) is not
/// n-admissible.
PinnacleValeClass make_class(int n, const ValueSet& vales,
                             const ValueSet& pinnacles);

/// Every n-admissible pair, ordered by (k, V, P) with V and P compared
/// lexicographically.
std::vector<PinnacleValeClass> enumerate_admissible_pairs(int n);

// ---------------------------------------------------------------------------
// Depth-first walk over admissible pairs.
//
// An admissible pair is a labelling of 1..n as vale, pinnacle or plain with
// 1 a vale, n a pinnacle, and N_PV(m) >= 1 for 2 <= m <= n. Sums over pairs
// whose summand factors value by value can share all prefix work.

enum class Role : std::uint8_t { vale, pinnacle, plain };

struct Step {
  int value;         // m
  Role role;
  int level_before;  // N_PV(m)
  int level_after;   // N_PV(m + 1)
};

/// Visits every n-admissible pair once. `extend(parent, step)` builds the
/// state after labelling `step.value`; `finish(state)` sees the state after
/// value n. Traversal order is fixed, so reductions are deterministic.
template <class State, class Extend, class Finish>
void walk_admissible(int n, const State& root, Extend&& extend,
                     Finish&& finish) {
  if (n < 2) return;
  const Step first{1, Role::vale, 0, 1};
  if (n == 2) {
    State s1 = extend(root, first);
    finish(extend(s1, Step{2, Role::pinnacle, 1, 0}));
    return;
  }
  std::vector<State> states;
  states.reserve(static_cast<std::size_t>(n) + 1);
  states.push_back(root);
  states.push_back(extend(root, first));

  auto recurse = [&](auto& self, int m, int level) -> void {
    if (m == n) {
      finish(extend(states.back(), Step{n, Role::pinnacle, level, level - 1}));
      return;
    }
    const int remaining = n - 1 - m;  // values m+1..n-1 still to label
    const Role order[] = {Role::vale, Role::pinnacle, Role::plain};
    for (Role role : order) {
      int after = level;
      if (role == Role::vale) after = level + 1;
      if (role == Role::pinnacle) after = level - 1;
      if (after < 1 || after - 1 > remaining) continue;
      states.push_back(extend(states.back(), Step{m, role, level, after}));
      self(self, m + 1, after);
      states.pop_back();
    }
  };
  recurse(recurse, 2, 1);
}

}  // namespace slzeta::perms
