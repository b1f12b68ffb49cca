#include "qposet/walk.hpp"

#include <algorithm>
#include <string>

#include "qposet/error.hpp"

namespace qposet {

namespace {

int distFromBottom(const HatPoset& h, int y) {
  return y == h.bottom() ? 0 : h.dist(h.bottom(), y);
}

int distToTop(const HatPoset& h, int y) {
  return y == h.top() ? 0 : h.dist(y, h.top());
}

}  // namespace

bool Walk::contains(int element) const {
  return std::find(elements.begin(), elements.end(), element) != elements.end();
}

Walk makeWalk(const HatPoset& h, WalkKind kind, std::vector<int> elements) {
  const std::size_t m = elements.size();
  if (m == 0) throw InvalidWalk("empty walk");
  if (kind == WalkKind::Cycle && m < 4) {
    throw InvalidWalk("a cycle in a Hasse diagram has length at least 4");
  }
  std::vector<int> sorted = elements;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidWalk("walk repeats an element");
  }
  Walk w{kind, std::move(elements), {}};
  const std::size_t stepCount = kind == WalkKind::Cycle ? m : m - 1;
  for (std::size_t j = 0; j < stepCount; ++j) {
    const int from = w.elements[j];
    const int to = w.elements[(j + 1) % m];
    const auto e = h.edge(from, to);
    if (!e) {
      throw InvalidWalk("{" + std::to_string(from) + "," + std::to_string(to) +
                        "} is not a Hasse edge");
    }
    w.steps.push_back(e->lower == from ? Step::Up : Step::Down);
  }
  return w;
}

int MuLabeling::at(int element) const {
  const auto it = std::find(elements.begin(), elements.end(), element);
  if (it == elements.end()) {
    throw InvalidArgument("element " + std::to_string(element) + " is not on the walk");
  }
  return labels[static_cast<std::size_t>(it - elements.begin())];
}

bool isSpecial(const Walk& w) {
  int balance = 0;
  for (Step s : w.steps) balance += static_cast<int>(s);
  return balance == 0;
}

MuLabeling muLabels(const Walk& w) {
  if (w.kind == WalkKind::Cycle && !isSpecial(w)) {
    throw NotConsistent("labels do not close up around a non-special cycle");
  }
  MuLabeling mu{w.elements, std::vector<int>(w.elements.size(), 0)};
  for (std::size_t j = 1; j < w.elements.size(); ++j) {
    mu.labels[j] = mu.labels[j - 1] + static_cast<int>(w.steps[j - 1]);
  }
  const int low = *std::min_element(mu.labels.begin(), mu.labels.end());
  for (int& label : mu.labels) label -= low;
  return mu;
}

bool isVerySpecial(const HatPoset& h, const Walk& c) {
  return c.kind == WalkKind::Cycle && isSpecial(c) &&
         !(c.contains(h.bottom()) && c.contains(h.top()));
}

bool cycleSatisfiesInequalities(const HatPoset& h, const Walk& c, const MuLabeling& mu) {
  const std::size_t m = c.elements.size();
  for (std::size_t a = 0; a < m; ++a) {
    const int ya = c.elements[a];
    for (std::size_t b = 0; b < m; ++b) {
      const int yb = c.elements[b];
      const int gap = mu.labels[a] - mu.labels[b];
      if (h.less(yb, ya) && gap > h.dist(yb, ya)) return false;
      if (gap > distFromBottom(h, ya) + distToTop(h, yb)) return false;
    }
  }
  return true;
}

bool pathSatisfiesInequalities(const HatPoset& h, const Walk& p, const MuLabeling& mu) {
  if (p.kind != WalkKind::Path || p.elements.front() != h.bottom() ||
      p.elements.back() != h.top() || !isSpecial(p)) {
    throw InvalidWalk("expected a special path from the bottom to the top");
  }
  const std::size_t m = p.elements.size();
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      const int ya = p.elements[a];
      const int yb = p.elements[b];
      if (h.less(yb, ya) && mu.labels[a] - mu.labels[b] > h.dist(yb, ya)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace qposet
