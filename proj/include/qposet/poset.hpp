#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace qposet {

/// Largest supported number of poset elements; relations are stored as 64-bit
/// masks.
inline constexpr int kMaxElements = 64;

using ElementMask = std::uint64_t;

inline constexpr ElementMask bitOf(int element) noexcept {
  return ElementMask{1} << (element - 1);
}

/// An ordered pair (lower, upper) meaning y_lower < y_upper.
struct Relation {
  int lower = 0;
  int upper = 0;
  auto operator<=>(const Relation&) const = default;
};

/// A finite poset on elements 1..d.
///
/// Stores the strict order as per-element masks (comparability in O(1)) and
/// the cover relations sorted lexicographically (drives every Hasse-graph
/// algorithm). Immutable once built.
class Poset {
 public:
  /// Transitive closure of `relations`; covers are recomputed from the closure.
  /// Throws CycleInInput if the closure is not irreflexive.
  static Poset fromCoverRelations(int d, std::span<const Relation> relations);

  /// `above[i-1]` holds the mask of elements strictly above y_i. The relation
  /// must already be a strict partial order.
  static Poset fromAboveMasks(std::vector<ElementMask> above);

  int size() const noexcept { return static_cast<int>(above_.size()); }

  bool less(int i, int j) const { return (above_[i - 1] & bitOf(j)) != 0; }
  bool comparable(int i, int j) const { return less(i, j) || less(j, i); }

  ElementMask above(int i) const { return above_[i - 1]; }
  ElementMask below(int i) const { return below_[i - 1]; }

  /// Elements that cover y_i / are covered by y_i.
  ElementMask upperCovers(int i) const { return upperCovers_[i - 1]; }
  ElementMask lowerCovers(int i) const { return lowerCovers_[i - 1]; }

  bool isMinimal(int i) const { return below_[i - 1] == 0; }
  bool isMaximal(int i) const { return above_[i - 1] == 0; }

  const std::vector<Relation>& covers() const noexcept { return covers_; }

  bool operator==(const Poset& other) const { return above_ == other.above_; }

 private:
  explicit Poset(std::vector<ElementMask> above);

  std::vector<ElementMask> above_;
  std::vector<ElementMask> below_;
  std::vector<ElementMask> upperCovers_;
  std::vector<ElementMask> lowerCovers_;
  std::vector<Relation> covers_;
};

/// The order-dual poset.
Poset dual(const Poset& p);

/// Relabels y_i as y_{perm[i-1]}; `perm` is a permutation of 1..d.
Poset relabel(const Poset& p, std::span<const int> perm);

/// An edge of the Hasse diagram of the hat-poset, stored with orientation.
struct HasseEdge {
  int lower = 0;
  int upper = 0;
  auto operator<=>(const HasseEdge&) const = default;
};

/// P with a fresh bottom (index 0) and top (index d+1) adjoined.
class HatPoset {
 public:
  explicit HatPoset(Poset base);

  const Poset& base() const noexcept { return base_; }
  /// Number of elements of the underlying poset.
  int size() const noexcept { return base_.size(); }
  int bottom() const noexcept { return 0; }
  int top() const noexcept { return base_.size() + 1; }
  int vertexCount() const noexcept { return base_.size() + 2; }

  /// Strict order of the hat-poset on indices 0..d+1.
  bool less(int y, int z) const;

  /// Hasse edges sorted lexicographically by (lower, upper).
  const std::vector<HasseEdge>& edges() const noexcept { return edges_; }

  /// The edge joining `a` and `b` in either orientation, if any.
  std::optional<HasseEdge> edge(int a, int b) const;
  bool isEdge(int a, int b) const { return edge(a, b).has_value(); }

  std::span<const int> upperCovers(int v) const { return up_[v]; }
  std::span<const int> lowerCovers(int v) const { return down_[v]; }
  /// Hasse neighbours in increasing index order.
  std::span<const int> neighbors(int v) const { return adjacent_[v]; }

  /// Length of the shortest saturated chain from y up to z.
  /// Throws NotComparable unless y < z.
  int dist(int y, int z) const;

 private:
  struct DistanceCache;

  Poset base_;
  std::vector<HasseEdge> edges_;
  std::vector<std::vector<int>> up_;
  std::vector<std::vector<int>> down_;
  std::vector<std::vector<int>> adjacent_;
  std::shared_ptr<DistanceCache> distances_;
};

HatPoset hat(const Poset& p);

/// Every saturated chain from the bottom to the top of the hat-poset.
std::vector<std::vector<int>> maximalChains(const HatPoset& h);

/// True iff all maximal chains of the hat-poset have the same length.
bool isPure(const Poset& p);

/// True iff every connected component of the Hasse diagram of P is a chain.
bool isDisjointUnionOfChains(const Poset& p);

}  // namespace qposet
