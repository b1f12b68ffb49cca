#pragma once

#include <vector>

#include "qposet/poset.hpp"

namespace qposet {

enum class WalkKind { Path, Cycle };

/// Orientation of one step of a walk: Up when the next element is larger.
enum class Step : int { Down = -1, Up = 1 };

/// A simple path or cycle in the Hasse diagram of the hat-poset.
///
/// `steps[j]` is the orientation from `elements[j]` to `elements[j+1]`; a
/// cycle additionally carries its closing step from the last element back to
/// the first.
struct Walk {
  WalkKind kind = WalkKind::Path;
  std::vector<int> elements;
  std::vector<Step> steps;

  bool contains(int element) const;
  bool operator==(const Walk&) const = default;
};

/// Validates `elements` as a walk of `h` and derives its steps. Throws
/// InvalidWalk on repeated elements, non-edges, or cycles shorter than 4.
Walk makeWalk(const HatPoset& h, WalkKind kind, std::vector<int> elements);

/// Height labels along a walk, parallel to `Walk::elements`.
struct MuLabeling {
  std::vector<int> elements;
  std::vector<int> labels;

  /// Label of `element`; throws InvalidArgument if it is not on the walk.
  int at(int element) const;
  bool operator==(const MuLabeling&) const = default;
};

/// Equal numbers of Up and Down steps (closing step included for cycles).
bool isSpecial(const Walk& w);

/// The unique labeling rising by one along Up steps with minimum 0.
/// Throws NotConsistent for a cycle that is not special.
MuLabeling muLabels(const Walk& w);

/// A special cycle that does not pass through both the bottom and the top.
bool isVerySpecial(const HatPoset& h, const Walk& c);

/// Checks, for every pair of cycle elements,
///   mu(a) - mu(b) <= dist(b, a)                 whenever b < a, and
///   mu(a) - mu(b) <= dist(bottom, a) + dist(b, top),
/// where the distance from the bottom to itself and from the top to itself
/// is taken as 0.
bool cycleSatisfiesInequalities(const HatPoset& h, const Walk& c, const MuLabeling& mu);

/// Checks mu(a) - mu(b) <= dist(b, a) for every comparable pair b < a on a
/// special bottom-to-top path. Throws InvalidWalk if `p` is not such a path.
bool pathSatisfiesInequalities(const HatPoset& h, const Walk& p, const MuLabeling& mu);

}  // namespace qposet
