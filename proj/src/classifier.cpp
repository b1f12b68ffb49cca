#include "qposet/classifier.hpp"

#include "qposet/geometry.hpp"
#include "qposet/polytope.hpp"

namespace qposet {

namespace {

class CycleSearch {
 public:
  CycleSearch(const HatPoset& h, const std::function<bool(const Walk&)>& visit)
      : h_(h), visit_(visit), onPath_(h.vertexCount(), false) {}

  void run() {
    for (int s = 0; s < h_.vertexCount() && !stopped_; ++s) {
      start_ = s;
      path_.assign(1, s);
      onPath_[s] = true;
      extend(s);
      onPath_[s] = false;
    }
  }

 private:
  void extend(int v) {
    for (int w : h_.neighbors(v)) {
      if (stopped_) return;
      if (w == start_) {
        if (path_.size() >= 3 && path_[1] < path_.back()) {
          if (!visit_(makeWalk(h_, WalkKind::Cycle, path_))) stopped_ = true;
        }
        continue;
      }
      if (w < start_ || onPath_[w]) continue;
      path_.push_back(w);
      onPath_[w] = true;
      extend(w);
      onPath_[w] = false;
      path_.pop_back();
    }
  }

  const HatPoset& h_;
  const std::function<bool(const Walk&)>& visit_;
  std::vector<bool> onPath_;
  std::vector<int> path_;
  int start_ = 0;
  bool stopped_ = false;
};

class PathSearch {
 public:
  PathSearch(const HatPoset& h, const std::function<bool(const Walk&)>& visit)
      : h_(h), visit_(visit), onPath_(h.vertexCount(), false) {}

  void run() {
    path_.assign(1, h_.bottom());
    onPath_[h_.bottom()] = true;
    extend(h_.bottom(), 0);
  }

 private:
  void extend(int v, int balance) {
    for (int w : h_.neighbors(v)) {
      if (stopped_) return;
      if (onPath_[w]) continue;
      const int step = h_.less(v, w) ? 1 : -1;
      if (w == h_.top()) {
        if (balance + step == 0) {
          path_.push_back(w);
          if (!visit_(makeWalk(h_, WalkKind::Path, path_))) stopped_ = true;
          path_.pop_back();
        }
        continue;
      }
      path_.push_back(w);
      onPath_[w] = true;
      extend(w, balance + step);
      onPath_[w] = false;
      path_.pop_back();
    }
  }

  const HatPoset& h_;
  const std::function<bool(const Walk&)>& visit_;
  std::vector<bool> onPath_;
  std::vector<int> path_;
  bool stopped_ = false;
};

// Visits walks that certify Q_P is not simplicial, cycles first.
void forEachWitness(const HatPoset& h, const std::function<bool(const Walk&)>& visit) {
  bool stopped = false;
  forEachCycle(h, [&](const Walk& c) {
    if (!isVerySpecial(h, c)) return true;
    if (!cycleSatisfiesInequalities(h, c, muLabels(c))) return true;
    stopped = !visit(c);
    return !stopped;
  });
  if (stopped) return;
  forEachSpecialPath(h, [&](const Walk& p) {
    if (!pathSatisfiesInequalities(h, p, muLabels(p))) return true;
    return visit(p);
  });
}

}  // namespace

void forEachCycle(const HatPoset& h, const std::function<bool(const Walk&)>& visit) {
  CycleSearch(h, visit).run();
}

std::vector<Walk> enumerateCycles(const HatPoset& h) {
  std::vector<Walk> cycles;
  forEachCycle(h, [&](const Walk& c) {
    cycles.push_back(c);
    return true;
  });
  return cycles;
}

void forEachSpecialPath(const HatPoset& h, const std::function<bool(const Walk&)>& visit) {
  PathSearch(h, visit).run();
}

std::vector<Walk> enumerateSpecialPaths(const HatPoset& h) {
  std::vector<Walk> paths;
  forEachSpecialPath(h, [&](const Walk& p) {
    paths.push_back(p);
    return true;
  });
  return paths;
}

std::string_view toString(ClassifyMethod method) {
  switch (method) {
    case ClassifyMethod::Combinatorial:
      return "combinatorial";
    case ClassifyMethod::Geometric:
      return "geometric";
    case ClassifyMethod::PureShortcut:
      return "pure-shortcut";
  }
  return "unknown";
}

std::optional<Walk> findWitness(const HatPoset& h) {
  std::optional<Walk> witness;
  forEachWitness(h, [&](const Walk& w) {
    witness = w;
    return false;
  });
  return witness;
}

ClassificationReport classify(const Poset& p, const ClassifyOptions& options) {
  const HatPoset h(p);
  ClassificationReport report;

  if (options.verify || options.method == ClassifyMethod::Geometric) {
    const auto vertices = buildVertexSet(h).vertices;
    const auto geometry = analyzeGeometry(vertices);
    if (options.verify) {
      report.fano = geometry.fano;
      report.terminal = geometry.terminal;
      report.gorenstein = geometry.gorenstein;
    }
    if (options.method == ClassifyMethod::Geometric) {
      report.method = ClassifyMethod::Geometric;
      report.qFactorial = geometry.simplicial;
      report.smooth = geometry.smooth;
      if (!report.qFactorial) report.witness = findWitness(h);
      if (options.allWitnesses) {
        forEachWitness(h, [&](const Walk& w) {
          report.witnesses.push_back(w);
          return true;
        });
      }
      return report;
    }
  }

  if (options.method == ClassifyMethod::PureShortcut && isPure(p)) {
    report.method = ClassifyMethod::PureShortcut;
    report.qFactorial = report.smooth = isDisjointUnionOfChains(p);
    if (!report.qFactorial) {
      // In a pure poset every very special cycle passes the inequalities.
      forEachCycle(h, [&](const Walk& c) {
        if (!isVerySpecial(h, c)) return true;
        if (!report.witness) report.witness = c;
        if (options.allWitnesses) report.witnesses.push_back(c);
        return options.allWitnesses;
      });
    }
    return report;
  }

  report.method = ClassifyMethod::Combinatorial;
  forEachWitness(h, [&](const Walk& w) {
    if (!report.witness) report.witness = w;
    if (options.allWitnesses) report.witnesses.push_back(w);
    return options.allWitnesses;
  });
  report.qFactorial = report.smooth = !report.witness.has_value();
  return report;
}

}  // namespace qposet
