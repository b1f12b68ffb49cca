#include "qposet/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "qposet/classifier.hpp"
#include "qposet/error.hpp"
#include "qposet/parallel.hpp"

namespace qposet {

namespace {

void collectAntichains(const Poset& p, int next, ElementMask chosen,
                       ElementMask blocked, std::vector<ElementMask>& out) {
  if (next > p.size()) {
    out.push_back(chosen);
    return;
  }
  collectAntichains(p, next + 1, chosen, blocked, out);
  if ((blocked & bitOf(next)) == 0) {
    collectAntichains(p, next + 1, chosen | bitOf(next),
                      blocked | p.above(next) | p.below(next), out);
  }
}

// Adds element d+1 above the down-closure of `lowerCovers`.
Poset extend(const Poset& p, ElementMask lowerCovers) {
  const int d = p.size();
  ElementMask downSet = lowerCovers;
  for (ElementMask m = lowerCovers; m != 0; m &= m - 1) {
    downSet |= p.below(std::countr_zero(m) + 1);
  }
  std::vector<ElementMask> above(d + 1, 0);
  for (int i = 1; i <= d; ++i) {
    above[i - 1] = p.above(i);
    if (downSet & bitOf(i)) above[i - 1] |= bitOf(d + 1);
  }
  return Poset::fromAboveMasks(std::move(above));
}

Poset relabelCanonically(const Poset& p, const std::vector<int>& order) {
  std::vector<int> perm(p.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    perm[order[k] - 1] = static_cast<int>(k) + 1;
  }
  return relabel(p, perm);
}

}  // namespace

PosetGenerator::PosetGenerator() {
  level_.push_back(Poset::fromCoverRelations(1, {}));
}

const std::vector<Poset>& PosetGenerator::next() {
  if (size_ >= kMaxElements) throw InvalidArgument("poset size limit reached");
  std::map<CanonicalKey, Poset> seen;
  for (const Poset& p : level_) {
    for (ElementMask a : antichains(p)) {
      Poset candidate = extend(p, a);
      auto form = canonicalForm(candidate);
      if (seen.contains(form.key)) continue;
      seen.emplace(std::move(form.key), relabelCanonically(candidate, form.order));
    }
  }
  level_.clear();
  level_.reserve(seen.size());
  for (auto& [key, poset] : seen) level_.push_back(std::move(poset));
  ++size_;
  return level_;
}

std::vector<Poset> enumeratePosets(int d) {
  if (d < 1 || d > kMaxEnumerationSize) {
    throw InvalidArgument("enumeration supports 1 <= d <= " +
                          std::to_string(kMaxEnumerationSize));
  }
  PosetGenerator generator;
  while (generator.size() < d) generator.next();
  return generator.current();
}

std::vector<ElementMask> antichains(const Poset& p) {
  std::vector<ElementMask> out;
  collectAntichains(p, 1, 0, 0, out);
  return out;
}

DualityQuotient quotientByDuality(std::span<const Poset> classes) {
  DualityQuotient q;
  for (const Poset& p : classes) {
    const auto key = canonicalKey(p);
    const auto dualKey = canonicalKey(dual(p));
    if (key == dualKey) ++q.selfDual;
    if (key <= dualKey) q.representatives.push_back(p);
  }
  return q;
}

std::size_t countSmooth(std::span<const Poset> posets, unsigned jobs) {
  std::atomic<std::size_t> smooth{0};
  parallelFor(posets.size(), jobs, [&](std::size_t i) {
    if (classify(posets[i]).smooth) ++smooth;
  });
  return smooth.load();
}

std::vector<TableRow> buildTable(int dMax, const TableOptions& options) {
  if (dMax < 1 || dMax > kMaxEnumerationSize) {
    throw InvalidArgument("table supports 1 <= d <= " +
                          std::to_string(kMaxEnumerationSize));
  }
  std::vector<TableRow> rows;
  auto knownRow = [&](int d) -> const TableRow* {
    for (const auto& r : options.known) {
      if (r.d == d) return &r;
    }
    return nullptr;
  };
  PosetGenerator generator;
  for (int d = 1; d <= dMax; ++d) {
    if (const TableRow* known = knownRow(d)) {
      rows.push_back(*known);
      continue;
    }
    while (generator.size() < d) generator.next();
    const auto quotient = quotientByDuality(generator.current());
    TableRow row{d, quotient.representatives.size(),
                 countSmooth(quotient.representatives, options.jobs)};
    rows.push_back(row);
    if (options.onRow) options.onRow(row);
  }
  return rows;
}

std::vector<TableRow> readTableCsv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return {};
  std::vector<TableRow> rows;
  std::string line;
  std::size_t lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line == "d,posets,smooth") continue;
    std::istringstream fields(line);
    TableRow row;
    char comma1 = 0;
    char comma2 = 0;
    if (!(fields >> row.d >> comma1 >> row.posetCount >> comma2 >> row.smoothCount) ||
        comma1 != ',' || comma2 != ',') {
      throw ParseError(path.string(), lineNo, "expected 'd,posets,smooth'");
    }
    rows.push_back(row);
  }
  return rows;
}

void appendTableCsv(const std::filesystem::path& path, const TableRow& row) {
  const bool fresh = !std::filesystem::exists(path) || std::filesystem::file_size(path) == 0;
  std::ofstream out(path, std::ios::app);
  if (!out) throw Error("cannot write " + path.string());
  if (fresh) out << "d,posets,smooth\n";
  out << row.d << ',' << row.posetCount << ',' << row.smoothCount << '\n';
}

}  // namespace qposet
