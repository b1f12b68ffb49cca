#include "qposet/polytope.hpp"

#include <string>

#include "qposet/error.hpp"

namespace qposet {

LatticeVector rho(const HatPoset& h, HasseEdge edge) {
  const auto actual = h.edge(edge.lower, edge.upper);
  if (!actual || *actual != edge) {
    throw NotAnEdge("{" + std::to_string(edge.lower) + "," +
                    std::to_string(edge.upper) +
                    "} is not an upward Hasse edge");
  }
  LatticeVector v{std::vector<int>(h.size(), 0)};
  if (edge.lower != h.bottom()) v.coords[edge.lower - 1] += 1;
  if (edge.upper != h.top()) v.coords[edge.upper - 1] -= 1;
  return v;
}

PolytopeVertexSet buildVertexSet(const HatPoset& h) {
  PolytopeVertexSet set;
  set.d = h.size();
  set.vertices.reserve(h.edges().size());
  for (const auto& e : h.edges()) {
    set.vertices.push_back(rho(h, e));
    set.edgeOfVertex.push_back(e);
  }
  return set;
}

LatticeVector maximalChainVectorSum(const HatPoset& h, std::span<const int> chain) {
  if (chain.size() < 2 || chain.front() != h.bottom() || chain.back() != h.top()) {
    throw NotAMaximalChain("a maximal chain runs from the bottom to the top");
  }
  LatticeVector sum{std::vector<int>(h.size(), 0)};
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
    const auto e = h.edge(chain[k], chain[k + 1]);
    if (!e || e->lower != chain[k]) {
      throw NotAMaximalChain("consecutive elements " + std::to_string(chain[k]) +
                             ", " + std::to_string(chain[k + 1]) +
                             " are not an upward cover");
    }
    const auto v = rho(h, *e);
    for (int i = 0; i < h.size(); ++i) sum.coords[i] += v.coords[i];
  }
  return sum;
}

}  // namespace qposet
