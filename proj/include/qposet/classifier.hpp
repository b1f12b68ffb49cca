#pragma once

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "qposet/poset.hpp"
#include "qposet/walk.hpp"

namespace qposet {

/// Visits every simple cycle of the Hasse diagram exactly once, up to rotation
/// and reflection. Each cycle starts at its smallest element and its second
/// element is the smaller of the two neighbours of the start. Cycles are
/// produced in lexicographic order. Returning false from `visit` stops the
/// search.
void forEachCycle(const HatPoset& h, const std::function<bool(const Walk&)>& visit);

std::vector<Walk> enumerateCycles(const HatPoset& h);

/// Visits every simple bottom-to-top path with as many Up as Down steps, in
/// lexicographic order.
void forEachSpecialPath(const HatPoset& h, const std::function<bool(const Walk&)>& visit);

std::vector<Walk> enumerateSpecialPaths(const HatPoset& h);

enum class ClassifyMethod { Combinatorial, Geometric, PureShortcut };

std::string_view toString(ClassifyMethod method);

struct ClassifyOptions {
  /// Combinatorial searches cycles and paths; Geometric reads the flags off
  /// the facets of Q_P; PureShortcut answers pure posets by the chain
  /// criterion and falls back to the combinatorial search otherwise.
  ClassifyMethod method = ClassifyMethod::Combinatorial;
  /// Collect every passing walk instead of stopping at the first.
  bool allWitnesses = false;
  /// Recompute the Fano, terminal and Gorenstein flags from the facets
  /// instead of asserting them.
  bool verify = false;
};

struct ClassificationReport {
  bool fano = true;
  bool terminal = true;
  bool gorenstein = true;
  bool qFactorial = true;
  bool smooth = true;
  /// First walk (in enumeration order) certifying that Q_P is not simplicial.
  std::optional<Walk> witness;
  /// Every certifying walk; filled only with `allWitnesses`.
  std::vector<Walk> witnesses;
  ClassifyMethod method = ClassifyMethod::Combinatorial;
};

/// First very special cycle satisfying the cycle inequalities, else first
/// special bottom-to-top path satisfying the path inequalities.
std::optional<Walk> findWitness(const HatPoset& h);

ClassificationReport classify(const Poset& p, const ClassifyOptions& options = {});

}  // namespace qposet
