#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "qposet/error.hpp"
#include "qposet/geometry.hpp"
#include "qposet/polytope.hpp"
#include "support.hpp"

using namespace qposet;
using namespace qposet::testing;

namespace {

using Points = std::vector<LatticeVector>;
using Matrix = std::vector<std::vector<long long>>;

LatticeVector vec(std::initializer_list<int> c) { return LatticeVector{std::vector<int>(c)}; }

long long cofactorDet(const Matrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  long long det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    Matrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<long long> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    det += (c % 2 ? -1 : 1) * m[0][c] * cofactorDet(minor);
  }
  return det;
}

struct PlainFacet {
  std::vector<long long> normal;
  long long offset;
  std::set<std::size_t> incident;
  auto operator<=>(const PlainFacet&) const = default;
};

// Hyperplane through each d-subset via the generalized cross product of the
// difference vectors; kept when all points lie on one side and the origin
// strictly inside.
std::set<PlainFacet> cofactorFacets(const Points& pts) {
  const std::size_t d = pts.front().dimension();
  const std::size_t n = pts.size();
  std::set<PlainFacet> out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + d, true);
  do {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < n; ++k)
      if (pick[k]) idx.push_back(k);
    Matrix diff;
    for (std::size_t r = 1; r < d; ++r) {
      std::vector<long long> row;
      for (std::size_t c = 0; c < d; ++c) row.push_back(pts[idx[r]][c] - pts[idx[0]][c]);
      diff.push_back(row);
    }
    std::vector<long long> a(d);
    for (std::size_t c = 0; c < d; ++c) {
      Matrix minor;
      for (const auto& row : diff) {
        std::vector<long long> m;
        for (std::size_t k = 0; k < d; ++k)
          if (k != c) m.push_back(row[k]);
        minor.push_back(m);
      }
      a[c] = (c % 2 ? -1 : 1) * cofactorDet(minor);
    }
    long long g = 0;
    for (auto x : a) g = std::gcd(g, std::abs(x));
    if (g == 0) continue;
    for (auto& x : a) x /= g;
    auto dot = [&](const LatticeVector& p) {
      long long s = 0;
      for (std::size_t c = 0; c < d; ++c) s += a[c] * p[c];
      return s;
    };
    long long c = dot(pts[idx[0]]);
    if (c == 0) continue;
    if (c < 0) {
      for (auto& x : a) x = -x;
      c = -c;
    }
    bool supports = true;
    std::set<std::size_t> on;
    for (std::size_t k = 0; k < n; ++k) {
      const long long v = dot(pts[k]);
      if (v > c) supports = false;
      if (v == c) on.insert(k);
    }
    if (supports) out.insert({a, c, on});
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

std::set<PlainFacet> plain(const std::vector<Facet>& facets) {
  std::set<PlainFacet> out;
  for (const auto& f : facets) {
    std::vector<long long> a;
    for (const auto& x : f.normal) a.push_back(static_cast<long long>(x));
    out.insert({a, static_cast<long long>(f.offset), {f.incident.begin(), f.incident.end()}});
  }
  return out;
}

Points qp(const Poset& p) { return buildVertexSet(hat(p)).vertices; }

}  // namespace

TEST_SUITE_BEGIN("geometry");

TEST_CASE("enumerateFacets") {
  SUBCASE("square") {
    const Points sq{vec({-1, 0}), vec({1, 0}), vec({0, -1}), vec({0, 1})};
    const auto facets = enumerateFacets(sq);
    REQUIRE(facets.size() == 4);
    std::set<std::vector<Integer>> normals;
    for (const auto& f : facets) {
      normals.insert(f.normal);
      CHECK(f.offset == 1);
      CHECK(f.incident.size() == 2);
    }
    CHECK(normals == std::set<std::vector<Integer>>{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}});
  }
  SUBCASE("simplex") {
    const auto facets = enumerateFacets(qp(chain(2)));
    CHECK(facets.size() == 3);
    for (const auto& f : facets) CHECK(f.offset == 1);
  }
  SUBCASE("chain of two and a point") {
    const auto pts = qp(exampleOne());
    const auto facets = enumerateFacets(pts);
    CHECK(plain(facets) == cofactorFacets(pts));
    for (const auto& f : facets) CHECK(f.offset == 1);
  }
  SUBCASE("degenerate") {
    const Points flat{vec({1, 0}), vec({-1, 0}), vec({0, 0})};
    CHECK_THROWS_AS(enumerateFacets(flat), DegenerateInput);
    CHECK_THROWS_AS(enumerateFacets(Points{}), DegenerateInput);
  }
  SUBCASE("origin on the boundary") {
    const Points corner{vec({0, 0}), vec({1, 0}), vec({0, 1})};
    CHECK_THROWS_AS(enumerateFacets(corner), OriginOnHyperplane);
    const Points away{vec({1, 0}), vec({0, 1}), vec({1, 1})};
    CHECK_THROWS_AS(enumerateFacets(away), OriginOnHyperplane);
  }
}

TEST_CASE("isFano") {
  CHECK(isFano(qp(chain(1))));
  CHECK(isFano(Points{vec({1, 0}), vec({0, 1}), vec({-1, -1})}));
  CHECK_FALSE(isFano(Points{vec({2, 0}), vec({0, 1}), vec({-1, -1})}));
  CHECK_FALSE(isFano(Points{vec({0, 0}), vec({1, 0}), vec({0, 1})}));
}

TEST_CASE("isTerminal") {
  const Points sq{vec({-1, 0}), vec({1, 0}), vec({0, -1}), vec({0, 1})};
  CHECK(isTerminal(sq));
  CHECK(isTerminal(Points{vec({-1}), vec({1})}));
  // (1,0) sits on an edge between two vertices
  CHECK_FALSE(isTerminal(Points{vec({1, 1}), vec({1, -1}), vec({-1, 0})}));
}

TEST_CASE("isGorenstein") {
  const Points sq{vec({-1, 0}), vec({1, 0}), vec({0, -1}), vec({0, 1})};
  CHECK(isGorenstein(enumerateFacets(sq)));
  CHECK(isGorenstein(enumerateFacets(Points{vec({1, 0}), vec({0, 1}), vec({-1, -1})})));
  SUBCASE("reflexive triangle with a boundary point") {
    const Points tri{vec({1, 0}), vec({0, 1}), vec({-2, -1})};
    const auto facets = enumerateFacets(tri);
    CHECK(plain(facets) == cofactorFacets(tri));
    CHECK(isGorenstein(facets));
  }
  SUBCASE("offset two") {
    const Points kite{vec({1, 0}), vec({-1, 0}), vec({0, 2}), vec({0, -1})};
    const auto facets = enumerateFacets(kite);
    CHECK(plain(facets) == cofactorFacets(kite));
    CHECK_FALSE(isGorenstein(facets));
  }
}

TEST_CASE("isSimplicial and isSmoothGeometric") {
  SUBCASE("V") {
    const auto pts = qp(vPoset());
    const auto facets = enumerateFacets(pts);
    CHECK_FALSE(isSimplicial(facets));
    CHECK_FALSE(isSmoothGeometric(pts, facets));
    bool fourOnOne = false;
    for (const auto& f : facets) fourOnOne |= f.incident.size() == 4;
    CHECK(fourOnOne);
  }
  SUBCASE("chain") {
    const auto pts = qp(chain(3));
    const auto facets = enumerateFacets(pts);
    CHECK(facets.size() == 4);
    CHECK(isSimplicial(facets));
    CHECK(isSmoothGeometric(pts, facets));
  }
  SUBCASE("antichain") {
    const auto pts = qp(antichain(2));
    const auto facets = enumerateFacets(pts);
    CHECK(isSimplicial(facets));
    CHECK(isSmoothGeometric(pts, facets));
  }
  SUBCASE("simplicial but not smooth") {
    const Points tri{vec({1, 0}), vec({0, 1}), vec({-2, -1})};
    const auto facets = enumerateFacets(tri);
    CHECK(isSimplicial(facets));
    CHECK_FALSE(isSmoothGeometric(tri, facets));
  }
}

TEST_CASE("determinant") {
  CHECK(determinant({}) == 1);
  CHECK(determinant({{3}}) == 3);
  CHECK(determinant({{0, 1}, {1, 0}}) == -1);
  CHECK(determinant({{1, 2}, {2, 4}}) == 0);
  CHECK(determinant({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}) == -1);
  CHECK_THROWS_AS(determinant({{1, 2}}), InvalidArgument);
}

TEST_CASE("analyzeGeometry") {
  const auto pts = qp(diamond());
  const auto r = analyzeGeometry(pts);
  CHECK(r.fano);
  CHECK(r.terminal);
  CHECK(r.gorenstein);
  CHECK_FALSE(r.simplicial);
  CHECK_FALSE(r.smooth);
  CHECK(r.facets == enumerateFacets(pts));
}

TEST_SUITE_END();

TEST_SUITE("geometry properties") {
  TEST_CASE("determinant agrees with cofactor expansion") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> entry(-1, 1);
    for (int t = 0; t < 2000; ++t) {
      Matrix m(4, std::vector<long long>(4));
      std::vector<std::vector<Integer>> mi(4, std::vector<Integer>(4));
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) mi[r][c] = m[r][c] = entry(rng);
      CHECK(determinant(mi) == cofactorDet(m));
    }
  }

  TEST_CASE("facets agree with the cofactor oracle") {
    for (const auto& p : bruteForceClassesUpTo(5)) {
      const auto pts = qp(p);
      CHECK(plain(enumerateFacets(pts)) == cofactorFacets(pts));
    }
  }

  TEST_CASE("facets are supporting and incidences exact") {
    for (const auto& p : bruteForceClassesUpTo(5)) {
      const auto pts = qp(p);
      for (const auto& f : enumerateFacets(pts)) {
        CHECK(f.offset > 0);
        CHECK(f.incident.size() >= pts.front().dimension());
        Integer g = 0;
        for (const auto& a : f.normal) g = boost::multiprecision::gcd(g, abs(a));
        CHECK(g == 1);
        std::set<std::size_t> on(f.incident.begin(), f.incident.end());
        for (std::size_t k = 0; k < pts.size(); ++k) {
          const auto v = evaluate(f, pts[k]);
          CHECK(v <= f.offset);
          CHECK((v == f.offset) == (on.count(k) == 1));
        }
      }
    }
  }

  TEST_CASE("Q_P is Fano, terminal and Gorenstein") {
    for (const auto& p : bruteForceClassesUpTo(5)) {
      const auto r = analyzeGeometry(qp(p));
      CHECK(r.fano);
      CHECK(r.terminal);
      CHECK(r.gorenstein);
    }
  }

  TEST_CASE("simplicial Q_P are smooth") {
    for (const auto& p : bruteForceClassesUpTo(5)) {
      const auto r = analyzeGeometry(qp(p));
      CHECK(r.simplicial == r.smooth);
    }
  }
}
