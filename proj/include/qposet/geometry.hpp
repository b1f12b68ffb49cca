#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qposet/polytope.hpp"

namespace qposet {

using Integer = boost::multiprecision::cpp_int;
/// Exact rational in canonical reduced form with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// A facet {x : normal . x = offset} of a full-dimensional polytope with the
/// origin in its interior. `normal` is primitive and `offset` positive; every
/// input point satisfies normal . x <= offset.
struct Facet {
  std::vector<Integer> normal;
  Integer offset;
  /// Positions (into the input point list) of the points on the hyperplane,
  /// ascending.
  std::vector<std::size_t> incident;

  bool operator==(const Facet&) const = default;
};

/// Brute-force facet enumeration over affinely independent d-subsets, in exact
/// arithmetic. Facets are returned once each, sorted by (normal, offset).
///
/// Throws DegenerateInput if the points do not affinely span R^d, and
/// OriginOnHyperplane if some supporting hyperplane passes through the origin
/// or separates it from the points.
std::vector<Facet> enumerateFacets(std::span<const LatticeVector> points);

/// normal . point for an integer point.
Integer evaluate(const Facet& facet, const LatticeVector& point);

/// Positions of the points that are vertices of their convex hull.
std::vector<std::size_t> hullVertices(std::span<const LatticeVector> points,
                                      std::span<const Facet> facets);

/// The origin is the only lattice point in the interior. Lattice points are
/// scanned over the bounding box of `points` ({-1,0,1}^d for every Q_P).
bool isFano(std::span<const LatticeVector> points, std::span<const Facet> facets);
/// As above; a failed origin precondition during facet enumeration counts as
/// not Fano.
bool isFano(std::span<const LatticeVector> points);

/// Every lattice point of the polytope other than the origin is a vertex.
bool isTerminal(std::span<const LatticeVector> points, std::span<const Facet> facets);
bool isTerminal(std::span<const LatticeVector> points);

/// Every facet lies on a hyperplane a . x = 1 with integral a.
bool isGorenstein(std::span<const Facet> facets);

/// Every facet has exactly d incident points.
bool isSimplicial(std::span<const Facet> facets);

/// Simplicial, and the vertices of every facet form a basis of Z^d.
bool isSmoothGeometric(std::span<const LatticeVector> points,
                       std::span<const Facet> facets);

/// Exact determinant of a square integer matrix (fraction-free elimination).
Integer determinant(std::vector<std::vector<Integer>> matrix);

struct GeometricReport {
  std::vector<Facet> facets;
  bool fano = false;
  bool terminal = false;
  bool gorenstein = false;
  bool simplicial = false;
  bool smooth = false;
};

/// Runs every geometric test on a point set that contains the origin in its
/// interior.
GeometricReport analyzeGeometry(std::span<const LatticeVector> points);

}  // namespace qposet
