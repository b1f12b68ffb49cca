#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "qposet/poset.hpp"

namespace qposet {

/// An integer point of Z^d.
struct LatticeVector {
  std::vector<int> coords;

  std::size_t dimension() const noexcept { return coords.size(); }
  int operator[](std::size_t i) const { return coords[i]; }

  auto operator<=>(const LatticeVector&) const = default;
};

/// The vertices of Q_P, one per Hasse edge of the hat-poset, in the order of
/// `HatPoset::edges()`.
struct PolytopeVertexSet {
  int d = 0;
  std::vector<LatticeVector> vertices;
  /// `edgeOfVertex[k]` is the Hasse edge mapped to `vertices[k]`.
  std::vector<HasseEdge> edgeOfVertex;
};

/// The lattice vector of a Hasse edge {y_i < y_j}: e_i when j is the top,
/// -e_j when i is the bottom, e_i - e_j otherwise.
/// Throws NotAnEdge if `edge` is not a Hasse edge of `h`.
LatticeVector rho(const HatPoset& h, HasseEdge edge);

PolytopeVertexSet buildVertexSet(const HatPoset& h);

/// Coordinatewise sum of rho over the consecutive edges of a maximal chain.
/// Always the zero vector; throws NotAMaximalChain for any other sequence.
LatticeVector maximalChainVectorSum(const HatPoset& h, std::span<const int> chain);

}  // namespace qposet
