#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "qposet/error.hpp"
#include "qposet/geometry.hpp"
#include "qposet/polytope.hpp"
#include "support.hpp"

using namespace qposet;
using namespace qposet::testing;

namespace {

LatticeVector vec(std::initializer_list<int> c) { return LatticeVector{std::vector<int>(c)}; }

std::set<LatticeVector> asSet(const std::vector<LatticeVector>& v) { return {v.begin(), v.end()}; }

bool isZero(const LatticeVector& v) {
  return std::all_of(v.coords.begin(), v.coords.end(), [](int c) { return c == 0; });
}

}  // namespace

TEST_SUITE_BEGIN("polytope");

TEST_CASE("rho") {
  const auto h = hat(exampleOne());
  CHECK(rho(h, {1, 2}) == vec({1, -1, 0}));
  CHECK(rho(h, {0, 1}) == vec({-1, 0, 0}));
  CHECK(rho(h, {3, 4}) == vec({0, 0, 1}));
  CHECK_THROWS_AS(rho(h, {1, 3}), NotAnEdge);
  CHECK_THROWS_AS(rho(h, {2, 1}), NotAnEdge);
  CHECK_THROWS_AS(rho(h, {0, 2}), NotAnEdge);
}

TEST_CASE("buildVertexSet") {
  SUBCASE("chain of two and a point") {
    const auto set = buildVertexSet(hat(exampleOne()));
    CHECK(set.d == 3);
    CHECK(asSet(set.vertices) ==
          std::set<LatticeVector>{vec({-1, 0, 0}), vec({1, -1, 0}), vec({0, 1, 0}),
                                  vec({0, 0, -1}), vec({0, 0, 1})});
    // ordered by producing edge
    CHECK(set.vertices == std::vector<LatticeVector>{vec({-1, 0, 0}), vec({0, 0, -1}),
                                                     vec({1, -1, 0}), vec({0, 1, 0}),
                                                     vec({0, 0, 1})});
    CHECK(set.edgeOfVertex ==
          std::vector<HasseEdge>{{0, 1}, {0, 3}, {1, 2}, {2, 4}, {3, 4}});
  }
  SUBCASE("chain is a simplex") {
    CHECK(asSet(buildVertexSet(hat(chain(2))).vertices) ==
          std::set<LatticeVector>{vec({-1, 0}), vec({1, -1}), vec({0, 1})});
  }
  SUBCASE("antichain") {
    CHECK(asSet(buildVertexSet(hat(antichain(2))).vertices) ==
          std::set<LatticeVector>{vec({-1, 0}), vec({1, 0}), vec({0, -1}), vec({0, 1})});
  }
}

TEST_CASE("maximalChainVectorSum") {
  const std::vector<int> c3{0, 1, 2, 3, 4};
  CHECK(maximalChainVectorSum(hat(chain(3)), c3) == vec({0, 0, 0}));
  const std::vector<int> short1{0, 3, 4};
  CHECK(maximalChainVectorSum(hat(exampleOne()), short1) == vec({0, 0, 0}));
  const std::vector<int> dia{0, 1, 2, 4, 5};
  CHECK(maximalChainVectorSum(hat(diamond()), dia) == vec({0, 0, 0, 0}));

  const auto h = hat(diamond());
  const std::vector<int> partial{0, 1, 2, 4};
  const std::vector<int> skipping{0, 1, 4, 5};
  const std::vector<int> descending{5, 4, 2, 1, 0};
  CHECK_THROWS_AS(maximalChainVectorSum(h, partial), NotAMaximalChain);
  CHECK_THROWS_AS(maximalChainVectorSum(h, skipping), NotAMaximalChain);
  CHECK_THROWS_AS(maximalChainVectorSum(h, descending), NotAMaximalChain);
}

TEST_SUITE_END();

TEST_SUITE("polytope properties") {
  TEST_CASE("rho is injective with small support") {
    for (const auto& p : bruteForceClassesUpTo(6)) {
      const auto set = buildVertexSet(hat(p));
      CHECK(asSet(set.vertices).size() == set.vertices.size());
      for (const auto& v : set.vertices) {
        int nonzero = 0;
        for (int c : v.coords) {
          CHECK(std::abs(c) <= 1);
          nonzero += c != 0;
        }
        CHECK(nonzero >= 1);
        CHECK(nonzero <= 2);
      }
    }
  }
}

TEST_SUITE("property: chain zero-sum") {
  TEST_CASE("every maximal chain sums to zero") {
    for (const auto& p : bruteForceClassesUpTo(6)) {
      const auto h = hat(p);
      for (const auto& c : maximalChains(h)) CHECK(isZero(maximalChainVectorSum(h, c)));
    }
  }
}

TEST_SUITE("property: weighted zero-sum") {
  TEST_CASE("chain-weighted edge sum is zero") {
    for (const auto& p : bruteForceClassesUpTo(6)) {
      const auto h = hat(p);
      std::map<HasseEdge, long> weight;
      for (const auto& c : maximalChains(h))
        for (std::size_t k = 0; k + 1 < c.size(); ++k) ++weight[{c[k], c[k + 1]}];
      std::vector<long> sum(p.size(), 0);
      for (const auto& e : h.edges()) {
        CHECK(weight[e] > 0);
        const auto r = rho(h, e);
        for (int i = 0; i < p.size(); ++i) sum[i] += weight[e] * r[i];
      }
      CHECK(std::all_of(sum.begin(), sum.end(), [](long s) { return s == 0; }));
    }
  }
}

TEST_SUITE("polytope properties") {
  TEST_CASE("every rho vector is a vertex of the hull") {
    for (const auto& p : bruteForceClassesUpTo(5)) {
      const auto points = buildVertexSet(hat(p)).vertices;
      const auto facets = enumerateFacets(points);
      const auto vertices = hullVertices(points, facets);
      CHECK(vertices.size() == points.size());
    }
  }
}
