#include "slzeta/circular_perms.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace slzeta::perms {

namespace {

ValueSet normalized(const ValueSet& values) {
  ValueSet out = values;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool contains(const ValueSet& sorted, int value) {
  return std::binary_search(sorted.begin(), sorted.end(), value);
}

}  // namespace

BruteForceTooLarge::BruteForceTooLarge(int n, int ceiling)
    : Error("brute-force enumeration for n=" + std::to_string(n) +
            " exceeds the ceiling n<=" + std::to_string(ceiling)),
      n_(n),
      ceiling_(ceiling) {}

CircularPermutation::CircularPermutation(std::vector<int> word)
    : word_(std::move(word)) {
  const int n = size();
  if (n == 0) throw std::invalid_argument("empty circular permutation");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : word_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("word is not a permutation of 1.." +
                                  std::to_string(n));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  std::rotate(word_.begin(), std::find(word_.begin(), word_.end(), 1),
              word_.end());
}

int CircularPermutation::operator()(int i) const {
  const int n = size();
  const int idx = ((i - 1) % n + n) % n;
  return word_[static_cast<std::size_t>(idx)];
}

PeakSets pinnacles_vales(std::span<const int> word) {
  PeakSets out;
  const std::size_t n = word.size();
  for (std::size_t i = 0; i < n; ++i) {
    const int prev = word[(i + n - 1) % n];
    const int cur = word[i];
    const int next = word[(i + 1) % n];
    if (prev < cur && cur > next) out.pinnacles.push_back(cur);
    if (prev > cur && cur < next) out.vales.push_back(cur);
  }
  std::sort(out.vales.begin(), out.vales.end());
  std::sort(out.pinnacles.begin(), out.pinnacles.end());
  return out;
}

PeakSets pinnacles_vales(const CircularPermutation& perm) {
  return pinnacles_vales(perm.word());
}

void for_each_circular_permutation(
    int n, const std::function<void(std::span<const int>)>& visit) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  std::vector<int> word(static_cast<std::size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  do {
    visit(word);
  } while (std::next_permutation(word.begin() + 1, word.end()));
}

std::vector<CircularPermutation> enumerate_class(int n, const ValueSet& vales,
                                                 const ValueSet& pinnacles,
                                                 int ceiling) {
  if (n > ceiling) throw BruteForceTooLarge(n, ceiling);
  const PeakSets target{normalized(vales), normalized(pinnacles)};
  std::vector<CircularPermutation> out;
  for_each_circular_permutation(n, [&](std::span<const int> word) {
    if (pinnacles_vales(word) == target) {
      out.emplace_back(std::vector<int>(word.begin(), word.end()));
    }
  });
  return out;
}

std::map<PeakSets, std::uint64_t> partition_by_peak_sets(int n, int ceiling) {
  if (n > ceiling) throw BruteForceTooLarge(n, ceiling);
  std::map<PeakSets, std::uint64_t> out;
  for_each_circular_permutation(
      n, [&](std::span<const int> word) { ++out[pinnacles_vales(word)]; });
  return out;
}

int n_pv(const ValueSet& vales, const ValueSet& pinnacles, int alpha) {
  const auto below = [alpha](int v) { return v < alpha; };
  return static_cast<int>(std::count_if(vales.begin(), vales.end(), below) -
                          std::count_if(pinnacles.begin(), pinnacles.end(),
                                        below));
}

bool is_admissible(int n, const ValueSet& vales, const ValueSet& pinnacles) {
  if (n < 2) return false;
  const ValueSet v = normalized(vales);
  const ValueSet p = normalized(pinnacles);
  if (v.size() != vales.size() || p.size() != pinnacles.size()) return false;
  if (v.empty() || p.empty() || v.size() != p.size()) return false;
  if (v.front() != 1 || p.back() != n || v.back() > n || p.front() < 1) {
    return false;
  }
  for (int x : v) {
    if (contains(p, x)) return false;
  }
  // q_j > w_j with Q = P \ {n}, W = V \ {1}, both ascending.
  for (std::size_t j = 0; j + 1 < p.size(); ++j) {
    if (p[j] <= v[j + 1]) return false;
  }
  return true;
}

BigInt class_number(int n, const ValueSet& vales, const ValueSet& pinnacles) {
  if (!is_admissible(n, vales, pinnacles)) return 0;
  const ValueSet v = normalized(vales);
  const ValueSet p = normalized(pinnacles);
  const auto k = static_cast<unsigned long>(p.size());
  BigInt out = pow2(static_cast<unsigned long>(n) - k - 1);
  for (int x = 1; x <= n; ++x) {
    if (contains(v, x)) continue;
    const int level = n_pv(v, p, x);
    if (contains(p, x)) {
      if (x != n) out *= binomial(static_cast<unsigned long>(level), 2);
    } else {
      out *= level;
    }
  }
  return out;
}

PinnacleValeClass make_class(int n, const ValueSet& vales,
                             const ValueSet& pinnacles) {
  if (!is_admissible(n, vales, pinnacles)) {
    throw std::invalid_argument("pair is not " + std::to_string(n) +
                                "-admissible");
  }
  PinnacleValeClass out;
  out.n = n;
  out.vales = normalized(vales);
  out.pinnacles = normalized(pinnacles);
  out.k = static_cast<int>(out.pinnacles.size());
  out.reduced_q.assign(out.pinnacles.begin(), out.pinnacles.end() - 1);
  out.reduced_w.assign(out.vales.begin() + 1, out.vales.end());
  out.exponents.resize(static_cast<std::size_t>(n), 1);
  for (int x : out.vales) out.exponents[static_cast<std::size_t>(x - 1)] = 2;
  for (int x : out.pinnacles) out.exponents[static_cast<std::size_t>(x - 1)] = 0;
  out.class_number = class_number(n, out.vales, out.pinnacles);
  return out;
}

std::vector<PinnacleValeClass> enumerate_admissible_pairs(int n) {
  if (n < 2) throw std::invalid_argument("admissible pairs need n >= 2");
  std::vector<PeakSets> found;
  walk_admissible(
      n, PeakSets{},
      [](const PeakSets& parent, const Step& step) {
        PeakSets next = parent;
        if (step.role == Role::vale) next.vales.push_back(step.value);
        if (step.role == Role::pinnacle) next.pinnacles.push_back(step.value);
        return next;
      },
      [&](const PeakSets& leaf) { found.push_back(leaf); });

  std::sort(found.begin(), found.end(),
            [](const PeakSets& x, const PeakSets& y) {
              if (x.vales.size() != y.vales.size()) {
                return x.vales.size() < y.vales.size();
              }
              return x < y;
            });
  std::vector<PinnacleValeClass> out;
  out.reserve(found.size());
  for (const auto& sets : found) {
    out.push_back(make_class(n, sets.vales, sets.pinnacles));
  }
  return out;
}

}  // namespace slzeta::perms
