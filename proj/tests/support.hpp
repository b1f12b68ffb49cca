#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "qposet/poset.hpp"

// Test-side oracles. Nothing here uses the library's canonical labeling or
// generator.
namespace qposet::testing {

inline Poset posetOf(int d, std::initializer_list<Relation> rel) {
  std::vector<Relation> v(rel);
  return Poset::fromCoverRelations(d, v);
}

inline Poset chain(int d) {
  std::vector<Relation> v;
  for (int i = 1; i < d; ++i) v.push_back({i, i + 1});
  return Poset::fromCoverRelations(d, v);
}

inline Poset antichain(int d) { return Poset::fromCoverRelations(d, {}); }

// y1<y2, y1<y3
inline Poset vPoset() { return posetOf(3, {{1, 2}, {1, 3}}); }
// y2<y1, y3<y1
inline Poset lambdaPoset() { return posetOf(3, {{2, 1}, {3, 1}}); }
inline Poset diamond() { return posetOf(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}}); }
// y1<y2 and an isolated y3
inline Poset exampleOne() { return posetOf(3, {{1, 2}}); }

// Order matrix as a bit string, row-major over ordered pairs (i, j), i != j.
inline std::uint64_t matrixCode(const Poset& p, std::span<const int> perm) {
  const int d = p.size();
  std::uint64_t code = 0;
  std::vector<int> inv(d + 1);
  for (int i = 1; i <= d; ++i) inv[perm[i - 1]] = i;
  for (int a = 1; a <= d; ++a) {
    for (int b = 1; b <= d; ++b) {
      if (a == b) continue;
      code = (code << 1) | (p.less(inv[a], inv[b]) ? 1u : 0u);
    }
  }
  return code;
}

// Smallest matrix code over all d! relabelings.
inline std::uint64_t bruteForceKey(const Poset& p) {
  std::vector<int> perm(p.size());
  std::iota(perm.begin(), perm.end(), 1);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    best = std::min(best, matrixCode(p, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool bruteForceIsomorphic(const Poset& a, const Poset& b) {
  return a.size() == b.size() && bruteForceKey(a) == bruteForceKey(b);
}

// One poset per isomorphism class, from raw enumeration of naturally labeled
// strict orders (i < j only if i < j as integers) and permutation dedup.
inline std::vector<Poset> bruteForceClasses(int d) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j) pairs.push_back({i, j});
  std::set<std::uint64_t> seen;
  std::vector<Poset> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs.size()); ++bits) {
    std::vector<ElementMask> above(d, 0);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (bits >> k & 1) above[pairs[k].first - 1] |= bitOf(pairs[k].second);
    }
    bool transitive = true;
    for (int i = 1; i <= d && transitive; ++i) {
      for (int j = 1; j <= d; ++j) {
        if ((above[i - 1] & bitOf(j)) && (above[j - 1] & ~above[i - 1])) {
          transitive = false;
          break;
        }
      }
    }
    if (!transitive) continue;
    Poset p = Poset::fromAboveMasks(above);
    if (seen.insert(bruteForceKey(p)).second) out.push_back(std::move(p));
  }
  return out;
}

// Cached per process; sizes 1..dMax in order.
inline const std::vector<Poset>& bruteForceClassesUpTo(int dMax) {
  static std::vector<std::vector<Poset>> cache;
  static std::vector<std::vector<Poset>> levels;
  while (static_cast<int>(levels.size()) < dMax) {
    levels.push_back(bruteForceClasses(static_cast<int>(levels.size()) + 1));
  }
  if (static_cast<int>(cache.size()) <= dMax) cache.resize(dMax + 1);
  auto& all = cache[dMax];
  if (all.empty()) {
    for (int d = 1; d <= dMax; ++d) all.insert(all.end(), levels[d - 1].begin(), levels[d - 1].end());
  }
  return all;
}

// Random poset: random relations compatible with a random linear order, then
// closed. Every poset on d elements has positive probability.
inline Poset randomPoset(int d, std::mt19937& rng, double density = 0.3) {
  std::vector<int> order(d);
  std::iota(order.begin(), order.end(), 1);
  std::shuffle(order.begin(), order.end(), rng);
  std::bernoulli_distribution coin(density);
  std::vector<Relation> rel;
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b)
      if (coin(rng)) rel.push_back({order[a], order[b]});
  return Poset::fromCoverRelations(d, rel);
}

inline std::vector<int> randomPermutation(int d, std::mt19937& rng) {
  std::vector<int> perm(d);
  std::iota(perm.begin(), perm.end(), 1);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace qposet::testing
