#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <span>
#include <vector>

#include "qposet/canonical.hpp"
#include "qposet/poset.hpp"

namespace qposet {

inline constexpr int kMaxEnumerationSize = 8;

/// Isomorph-free generation, one level at a time.
///
/// Every poset on d elements arises from one on d-1 elements by adding a new
/// maximal element whose lower covers form an antichain; candidates are
/// deduplicated by canonical key. Each level is returned as canonical
/// representatives sorted by key.
class PosetGenerator {
 public:
  PosetGenerator();

  /// Size of the current level (starts at 1).
  int size() const noexcept { return size_; }
  const std::vector<Poset>& current() const noexcept { return level_; }

  /// Advances to the next size and returns the new level.
  const std::vector<Poset>& next();

 private:
  int size_ = 1;
  std::vector<Poset> level_;
};

/// One representative per isomorphism class of posets on d elements.
std::vector<Poset> enumeratePosets(int d);

/// Every antichain of `p` as an element mask, the empty one included.
std::vector<ElementMask> antichains(const Poset& p);

struct DualityQuotient {
  /// Classes kept: those whose key is not larger than their dual's key.
  std::vector<Poset> representatives;
  std::size_t selfDual = 0;
};

/// Keeps one class per pair {P, dual(P)}; expects one poset per
/// isomorphism class.
DualityQuotient quotientByDuality(std::span<const Poset> classes);

struct TableRow {
  int d = 0;
  std::size_t posetCount = 0;
  std::size_t smoothCount = 0;

  bool operator==(const TableRow&) const = default;
};

/// Number of posets whose Q_P is smooth, classified on `jobs` workers
/// (0 = all cores). The total does not depend on `jobs`.
std::size_t countSmooth(std::span<const Poset> posets, unsigned jobs = 0);

struct TableOptions {
  unsigned jobs = 0;
  /// Rows already known (e.g. from a results file); their sizes are skipped
  /// when nothing later needs generating.
  std::vector<TableRow> known;
  /// Called once per row as soon as it is computed.
  std::function<void(const TableRow&)> onRow;
};

/// Rows for d = 1..dMax: classes up to isomorphism and duality, and how many
/// of them give a smooth Q_P.
std::vector<TableRow> buildTable(int dMax, const TableOptions& options = {});

/// CSV with header `d,posets,smooth`.
std::vector<TableRow> readTableCsv(const std::filesystem::path& path);
void appendTableCsv(const std::filesystem::path& path, const TableRow& row);

}  // namespace qposet
