#include "qposet/witness.hpp"

#include <algorithm>
#include <limits>

#include "qposet/error.hpp"
#include "qposet/polytope.hpp"

namespace qposet {

namespace {

MuLabeling eligibleLabels(const HatPoset& h, const Walk& walk) {
  if (walk.kind == WalkKind::Cycle) {
    if (!isVerySpecial(h, walk)) throw WalkNotEligible("cycle is not very special");
    auto mu = muLabels(walk);
    if (!cycleSatisfiesInequalities(h, walk, mu)) {
      throw WalkNotEligible("cycle violates the distance inequalities");
    }
    return mu;
  }
  if (walk.elements.front() != h.bottom() || walk.elements.back() != h.top() ||
      !isSpecial(walk)) {
    throw WalkNotEligible("path is not a special bottom-to-top path");
  }
  auto mu = muLabels(walk);
  if (!pathSatisfiesInequalities(h, walk, mu)) {
    throw WalkNotEligible("path violates the distance inequalities");
  }
  return mu;
}

}  // namespace

Facet witnessHyperplane(const HatPoset& h, const Walk& walk) {
  const MuLabeling mu = eligibleLabels(h, walk);
  const int bottom = h.bottom();
  const int top = h.top();

  int low = std::numeric_limits<int>::min();
  int high = std::numeric_limits<int>::max();
  for (std::size_t k = 0; k < walk.elements.size(); ++k) {
    const int y = walk.elements[k];
    low = std::max(low, mu.labels[k] - (y == bottom ? 0 : h.dist(bottom, y)));
    high = std::min(high, mu.labels[k] + (y == top ? 0 : h.dist(y, top)));
  }
  int level = low;
  if (walk.contains(bottom)) level = mu.at(bottom);
  if (walk.contains(top)) level = mu.at(top);
  if (level < low || level > high) {
    throw WalkNotEligible("no admissible level for the walk");
  }

  std::vector<long> coefficient(h.vertexCount(), 0);
  for (std::size_t k = 0; k < walk.elements.size(); ++k) {
    coefficient[walk.elements[k]] = level - mu.labels[k];
  }
  for (int y = 1; y <= h.size(); ++y) {
    if (walk.contains(y)) continue;
    bool hasBelow = false;
    bool hasAbove = false;
    long fromBelow = 0;
    long fromAbove = 0;
    for (int w : walk.elements) {
      if (h.less(w, y)) {
        hasBelow = true;
        fromBelow = std::max(fromBelow, coefficient[w] - h.dist(w, y));
      } else if (h.less(y, w)) {
        hasAbove = true;
        fromAbove = std::min(fromAbove, coefficient[w] + h.dist(y, w));
      }
    }
    if (hasBelow && hasAbove && fromBelow != 0 && fromAbove != 0) {
      throw WalkNotEligible("conflicting bounds at element " + std::to_string(y));
    }
    if (hasBelow && fromBelow != 0) coefficient[y] = fromBelow;
    else if (hasAbove && fromAbove != 0) coefficient[y] = fromAbove;
  }

  Facet plane;
  plane.normal.reserve(h.size());
  for (int i = 1; i <= h.size(); ++i) plane.normal.emplace_back(coefficient[i]);
  plane.offset = 1;
  const auto vertexSet = buildVertexSet(h);
  for (std::size_t k = 0; k < vertexSet.vertices.size(); ++k) {
    if (evaluate(plane, vertexSet.vertices[k]) == plane.offset) {
      plane.incident.push_back(k);
    }
  }
  return plane;
}

}  // namespace qposet
