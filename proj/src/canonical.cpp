#include "qposet/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <optional>
#include <tuple>
#include <utility>

namespace qposet {

namespace {

using Cell = std::vector<int>;
using Partition = std::vector<Cell>;

// Splits cells by the number of elements below / above in every cell until
// the ordered partition is equitable. Pieces of a split cell are ordered by
// their signature, so the result depends only on the isomorphism type of
// (poset, partition).
void refine(const Poset& p, Partition& cells) {
  const int d = p.size();
  std::vector<ElementMask> cellMask;
  std::vector<std::vector<int>> signature(d + 1);
  for (;;) {
    cellMask.assign(cells.size(), 0);
    for (std::size_t c = 0; c < cells.size(); ++c) {
      for (int v : cells[c]) cellMask[c] |= bitOf(v);
    }
    Partition next;
    next.reserve(cells.size());
    for (const Cell& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      for (int v : cell) {
        auto& sig = signature[v];
        sig.clear();
        for (ElementMask m : cellMask) {
          sig.push_back(std::popcount(p.below(v) & m));
          sig.push_back(std::popcount(p.above(v) & m));
        }
      }
      Cell sorted = cell;
      std::stable_sort(sorted.begin(), sorted.end(), [&](int a, int b) {
        return signature[a] < signature[b];
      });
      std::size_t start = 0;
      for (std::size_t k = 1; k <= sorted.size(); ++k) {
        if (k == sorted.size() || signature[sorted[k]] != signature[sorted[start]]) {
          next.emplace_back(sorted.begin() + start, sorted.begin() + k);
          start = k;
        }
      }
    }
    const bool stable = next.size() == cells.size();
    cells = std::move(next);
    if (stable) return;
  }
}

Partition initialPartition(const Poset& p) {
  const int d = p.size();
  std::vector<int> byDownSet(d);
  for (int i = 0; i < d; ++i) byDownSet[i] = i + 1;
  // Strictly smaller down-sets come first, which is a linear extension.
  std::sort(byDownSet.begin(), byDownSet.end(), [&](int a, int b) {
    return std::popcount(p.below(a)) < std::popcount(p.below(b));
  });
  std::vector<int> height(d + 1, 0);
  for (int v : byDownSet) {
    ElementMask lower = p.lowerCovers(v);
    while (lower != 0) {
      const int u = std::countr_zero(lower) + 1;
      height[v] = std::max(height[v], height[u] + 1);
      lower &= lower - 1;
    }
  }
  auto invariant = [&](int v) {
    return std::make_tuple(height[v], std::popcount(p.upperCovers(v)),
                           std::popcount(p.lowerCovers(v)));
  };
  Cell all(d);
  for (int i = 0; i < d; ++i) all[i] = i + 1;
  std::sort(all.begin(), all.end(),
            [&](int a, int b) { return invariant(a) < invariant(b); });
  Partition cells;
  std::size_t start = 0;
  for (std::size_t k = 1; k <= all.size(); ++k) {
    if (k == all.size() || invariant(all[k]) != invariant(all[start])) {
      cells.emplace_back(all.begin() + start, all.begin() + k);
      start = k;
    }
  }
  return cells;
}

std::vector<std::uint8_t> encode(const Poset& p, const std::vector<int>& order) {
  const int d = p.size();
  std::vector<std::uint8_t> bytes(1 + (d * d + 7) / 8, 0);
  bytes[0] = static_cast<std::uint8_t>(d);
  int bit = 0;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j, ++bit) {
      if (p.less(order[i], order[j])) {
        bytes[1 + bit / 8] |= static_cast<std::uint8_t>(0x80u >> (bit % 8));
      }
    }
  }
  return bytes;
}

bool twins(const Poset& p, int u, int v) {
  return p.above(u) == p.above(v) && p.below(u) == p.below(v);
}

class Canonicalizer {
 public:
  explicit Canonicalizer(const Poset& p) : p_(p) {}

  CanonicalForm run() {
    search(initialPartition(p_));
    return {CanonicalKey{std::move(bestKey_)}, std::move(bestOrder_)};
  }

 private:
  void search(Partition cells) {
    refine(p_, cells);
    auto target = std::find_if(cells.begin(), cells.end(),
                               [](const Cell& c) { return c.size() > 1; });
    if (target == cells.end()) {
      std::vector<int> order;
      order.reserve(cells.size());
      for (const Cell& c : cells) order.push_back(c.front());
      auto key = encode(p_, order);
      if (!found_ || key < bestKey_) {
        found_ = true;
        bestKey_ = std::move(key);
        bestOrder_ = std::move(order);
      }
      return;
    }
    const std::size_t t = static_cast<std::size_t>(target - cells.begin());
    const Cell cell = cells[t];
    std::vector<int> tried;
    for (int v : cell) {
      // Swapping twins is an automorphism fixing the partition, so their
      // subtrees yield the same leaves.
      if (std::any_of(tried.begin(), tried.end(),
                      [&](int u) { return twins(p_, u, v); })) {
        continue;
      }
      tried.push_back(v);
      Partition child;
      child.reserve(cells.size() + 1);
      child.insert(child.end(), cells.begin(), cells.begin() + t);
      child.push_back({v});
      Cell rest;
      for (int w : cell) {
        if (w != v) rest.push_back(w);
      }
      child.push_back(std::move(rest));
      child.insert(child.end(), cells.begin() + t + 1, cells.end());
      search(std::move(child));
    }
  }

  const Poset& p_;
  bool found_ = false;
  std::vector<std::uint8_t> bestKey_;
  std::vector<int> bestOrder_;
};

}  // namespace

std::string CanonicalKey::hex() const {
  std::string out;
  out.reserve(bytes.size() * 2);
  char buf[3];
  for (std::uint8_t b : bytes) {
    std::snprintf(buf, sizeof buf, "%02x", b);
    out += buf;
  }
  return out;
}

CanonicalForm canonicalForm(const Poset& p) { return Canonicalizer(p).run(); }

CanonicalKey canonicalKey(const Poset& p) { return canonicalForm(p).key; }

Poset canonicalPoset(const Poset& p) {
  const auto form = canonicalForm(p);
  std::vector<int> perm(p.size());
  for (std::size_t k = 0; k < form.order.size(); ++k) {
    perm[form.order[k] - 1] = static_cast<int>(k) + 1;
  }
  return relabel(p, perm);
}

}  // namespace qposet
