#pragma once

#include "qposet/geometry.hpp"
#include "qposet/poset.hpp"
#include "qposet/walk.hpp"

namespace qposet {

/// Builds integral a with a . x = 1 on every edge vector of `walk` and
/// a . x <= 1 on Q_P, for a walk that certifies non-simpliciality: a very
/// special cycle meeting the cycle inequalities, or a special bottom-to-top
/// path meeting the path inequalities.
///
/// Coefficients on the walk are c - mu(y) for a level c chosen between
///   max(mu(y) - dist(bottom, y)) and min(mu(y) + dist(y, top)),
/// pinned to mu(bottom) or mu(top) when the walk passes through them.
/// Elements off the walk take the largest value forced from below or the
/// smallest value forced from above, else 0.
///
/// The returned hyperplane has offset 1 and `incident` lists the positions in
/// `buildVertexSet(h)` lying on it. It need not be a facet. Throws
/// WalkNotEligible when `walk` does not qualify.
Facet witnessHyperplane(const HatPoset& h, const Walk& walk);

}  // namespace qposet
