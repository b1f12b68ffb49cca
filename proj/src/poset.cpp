#include "qposet/poset.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <mutex>
#include <string>

#include "qposet/error.hpp"

namespace qposet {

namespace {

void checkSize(int d) {
  if (d < 1 || d > kMaxElements) {
    throw InvalidArgument("poset size must be in 1.." +
                          std::to_string(kMaxElements) + ", got " +
                          std::to_string(d));
  }
}

template <typename Fn>
void forEachBit(ElementMask mask, Fn&& fn) {
  while (mask != 0) {
    int bit = std::countr_zero(mask);
    fn(bit + 1);
    mask &= mask - 1;
  }
}

}  // namespace

Poset::Poset(std::vector<ElementMask> above)
    : above_(std::move(above)),
      below_(above_.size(), 0),
      upperCovers_(above_.size(), 0),
      lowerCovers_(above_.size(), 0) {
  const int d = size();
  for (int i = 1; i <= d; ++i) {
    forEachBit(above_[i - 1], [&](int j) { below_[j - 1] |= bitOf(i); });
  }
  for (int i = 1; i <= d; ++i) {
    // j covers i iff nothing above i lies strictly below j.
    forEachBit(above_[i - 1], [&](int j) {
      if ((above_[i - 1] & below_[j - 1]) == 0) {
        upperCovers_[i - 1] |= bitOf(j);
        lowerCovers_[j - 1] |= bitOf(i);
        covers_.push_back({i, j});
      }
    });
  }
}

Poset Poset::fromCoverRelations(int d, std::span<const Relation> relations) {
  checkSize(d);
  std::vector<ElementMask> above(d, 0);
  for (const auto& r : relations) {
    if (r.lower < 1 || r.lower > d || r.upper < 1 || r.upper > d) {
      throw InvalidArgument("relation (" + std::to_string(r.lower) + "," +
                            std::to_string(r.upper) + ") out of range 1.." +
                            std::to_string(d));
    }
    above[r.lower - 1] |= bitOf(r.upper);
  }
  // Warshall on bit rows.
  for (int k = 1; k <= d; ++k) {
    for (int i = 1; i <= d; ++i) {
      if (above[i - 1] & bitOf(k)) above[i - 1] |= above[k - 1];
    }
  }
  for (int i = 1; i <= d; ++i) {
    if (above[i - 1] & bitOf(i)) {
      throw CycleInInput("relations contain a cycle through element " +
                         std::to_string(i));
    }
  }
  return Poset(std::move(above));
}

Poset Poset::fromAboveMasks(std::vector<ElementMask> above) {
  const int d = static_cast<int>(above.size());
  checkSize(d);
  const ElementMask all = d == 64 ? ~ElementMask{0} : (bitOf(d + 1) - 1);
  for (int i = 1; i <= d; ++i) {
    const ElementMask row = above[i - 1];
    if ((row & ~all) != 0) throw InvalidArgument("order mask out of range");
    if (row & bitOf(i)) {
      throw CycleInInput("order relation is reflexive at " + std::to_string(i));
    }
    bool transitive = true;
    forEachBit(row, [&](int j) {
      if ((above[j - 1] & ~row) != 0) transitive = false;
    });
    if (!transitive) {
      throw InvalidArgument("order relation is not transitive at " +
                            std::to_string(i));
    }
  }
  return Poset(std::move(above));
}

Poset dual(const Poset& p) {
  std::vector<ElementMask> above(p.size());
  for (int i = 1; i <= p.size(); ++i) above[i - 1] = p.below(i);
  return Poset::fromAboveMasks(std::move(above));
}

Poset relabel(const Poset& p, std::span<const int> perm) {
  const int d = p.size();
  if (static_cast<int>(perm.size()) != d) {
    throw InvalidArgument("permutation length does not match poset size");
  }
  ElementMask seen = 0;
  for (int v : perm) {
    if (v < 1 || v > d || (seen & bitOf(v))) {
      throw InvalidArgument("not a permutation of 1..d");
    }
    seen |= bitOf(v);
  }
  std::vector<ElementMask> above(d, 0);
  for (int i = 1; i <= d; ++i) {
    forEachBit(p.above(i), [&](int j) {
      above[perm[i - 1] - 1] |= bitOf(perm[j - 1]);
    });
  }
  return Poset::fromAboveMasks(std::move(above));
}

struct HatPoset::DistanceCache {
  explicit DistanceCache(int n) : once(n), rows(n) {}
  std::vector<std::once_flag> once;
  std::vector<std::vector<int>> rows;
};

HatPoset::HatPoset(Poset base)
    : base_(std::move(base)),
      up_(base_.size() + 2),
      down_(base_.size() + 2),
      adjacent_(base_.size() + 2),
      distances_(std::make_shared<DistanceCache>(base_.size() + 2)) {
  const int d = base_.size();
  const int top = d + 1;
  for (int i = 1; i <= d; ++i) {
    if (base_.isMinimal(i)) edges_.push_back({0, i});
    forEachBit(base_.upperCovers(i), [&](int j) { edges_.push_back({i, j}); });
    if (base_.isMaximal(i)) edges_.push_back({i, top});
  }
  std::sort(edges_.begin(), edges_.end());
  for (const auto& e : edges_) {
    up_[e.lower].push_back(e.upper);
    down_[e.upper].push_back(e.lower);
    adjacent_[e.lower].push_back(e.upper);
    adjacent_[e.upper].push_back(e.lower);
  }
  for (auto& list : adjacent_) std::sort(list.begin(), list.end());
  for (auto& list : down_) std::sort(list.begin(), list.end());
}

bool HatPoset::less(int y, int z) const {
  const int t = top();
  if (y < 0 || y > t || z < 0 || z > t || y == z) return false;
  if (y == 0) return true;
  if (z == t) return true;
  if (z == 0 || y == t) return false;
  return base_.less(y, z);
}

std::optional<HasseEdge> HatPoset::edge(int a, int b) const {
  const int n = vertexCount();
  if (a < 0 || a >= n || b < 0 || b >= n) return std::nullopt;
  if (std::find(up_[a].begin(), up_[a].end(), b) != up_[a].end()) {
    return HasseEdge{a, b};
  }
  if (std::find(up_[b].begin(), up_[b].end(), a) != up_[b].end()) {
    return HasseEdge{b, a};
  }
  return std::nullopt;
}

int HatPoset::dist(int y, int z) const {
  if (!less(y, z)) {
    throw NotComparable("dist(" + std::to_string(y) + ", " + std::to_string(z) +
                        ") requires y < z");
  }
  auto& cache = *distances_;
  std::call_once(cache.once[y], [&] {
    std::vector<int> row(vertexCount(), -1);
    std::deque<int> queue{y};
    row[y] = 0;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int w : up_[v]) {
        if (row[w] < 0) {
          row[w] = row[v] + 1;
          queue.push_back(w);
        }
      }
    }
    cache.rows[y] = std::move(row);
  });
  return cache.rows[y][z];
}

HatPoset hat(const Poset& p) { return HatPoset(p); }

std::vector<std::vector<int>> maximalChains(const HatPoset& h) {
  std::vector<std::vector<int>> chains;
  std::vector<int> current{h.bottom()};
  auto extend = [&](auto&& self, int v) -> void {
    if (v == h.top()) {
      chains.push_back(current);
      return;
    }
    for (int w : h.upperCovers(v)) {
      current.push_back(w);
      self(self, w);
      current.pop_back();
    }
  };
  extend(extend, h.bottom());
  return chains;
}

bool isPure(const Poset& p) {
  // Pure iff every element has a well-defined rank: all saturated chains from
  // the bottom to a given element share one length, and every maximal element
  // sits at the same rank.
  const int d = p.size();
  std::vector<int> rank(d + 1, -1);
  std::vector<int> order;
  order.reserve(d);
  std::vector<int> pending(d + 1);
  for (int i = 1; i <= d; ++i) {
    pending[i] = std::popcount(p.lowerCovers(i));
    if (pending[i] == 0) order.push_back(i);
  }
  for (std::size_t k = 0; k < order.size(); ++k) {
    const int v = order[k];
    int r = -1;
    bool consistent = true;
    if (p.isMinimal(v)) {
      r = 1;
    } else {
      forEachBit(p.lowerCovers(v), [&](int u) {
        if (r < 0) r = rank[u] + 1;
        else if (rank[u] + 1 != r) consistent = false;
      });
    }
    if (!consistent) return false;
    rank[v] = r;
    forEachBit(p.upperCovers(v), [&](int w) {
      if (--pending[w] == 0) order.push_back(w);
    });
  }
  int topRank = -1;
  for (int i = 1; i <= d; ++i) {
    if (!p.isMaximal(i)) continue;
    if (topRank < 0) topRank = rank[i];
    else if (rank[i] != topRank) return false;
  }
  return true;
}

bool isDisjointUnionOfChains(const Poset& p) {
  for (int i = 1; i <= p.size(); ++i) {
    if (std::popcount(p.upperCovers(i)) > 1) return false;
    if (std::popcount(p.lowerCovers(i)) > 1) return false;
  }
  return true;
}

}  // namespace qposet
