#include "qposet/geometry.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "qposet/error.hpp"

namespace qposet {

namespace {

using RationalRow = std::vector<Rational>;

// Rank of a set of rational rows (destroys its argument).
std::size_t rank(std::vector<RationalRow> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const Rational factor = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= factor * rows[r][j];
    }
    ++r;
  }
  return r;
}

// Homogenised point (x_1, ..., x_d, 1): d+1 such vectors are linearly
// independent iff the points are affinely independent.
RationalRow homogenize(const LatticeVector& p) {
  RationalRow row;
  row.reserve(p.dimension() + 1);
  for (int x : p.coords) row.emplace_back(x);
  row.emplace_back(1);
  return row;
}

// Scales a rational vector to a primitive integer vector with the same
// direction.
std::vector<Integer> primitive(const RationalRow& v) {
  Integer lcm = 1;
  for (const auto& x : v) {
    const Integer den = boost::multiprecision::denominator(x);
    lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
  }
  std::vector<Integer> out;
  out.reserve(v.size());
  Integer g = 0;
  for (const auto& x : v) {
    out.push_back(boost::multiprecision::numerator(x) * (lcm / boost::multiprecision::denominator(x)));
    g = boost::multiprecision::gcd(g, abs(out.back()));
  }
  if (g > 1) {
    for (auto& x : out) x /= g;
  }
  return out;
}

class FacetSearch {
 public:
  FacetSearch(std::span<const LatticeVector> points, std::size_t d)
      : points_(points), d_(d) {}

  std::vector<Facet> run() {
    search(0);
    std::vector<Facet> out;
    out.reserve(found_.size());
    for (auto& [normal, facet] : found_) out.push_back(std::move(facet));
    return out;
  }

 private:
  // Rows are reduced against all earlier rows and scaled so that their pivot
  // entry is 1.
  void search(std::size_t start) {
    if (rows_.size() == d_) {
      leaf();
      return;
    }
    const std::size_t needed = d_ - rows_.size();
    for (std::size_t k = start; k + needed <= points_.size(); ++k) {
      RationalRow row = homogenize(points_[k]);
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rational factor = row[pivots_[r]];
        if (factor == 0) continue;
        for (std::size_t j = 0; j <= d_; ++j) row[j] -= factor * rows_[r][j];
      }
      const auto pivot = std::find_if(row.begin(), row.end(),
                                      [](const Rational& x) { return x != 0; });
      if (pivot == row.end()) continue;  // affinely dependent on the subset
      const auto pivotColumn = static_cast<std::size_t>(pivot - row.begin());
      const Rational scale = *pivot;
      for (auto& x : row) x /= scale;
      rows_.push_back(std::move(row));
      pivots_.push_back(pivotColumn);
      search(k + 1);
      rows_.pop_back();
      pivots_.pop_back();
    }
  }

  void leaf() {
    // Null vector (a_1..a_d, t) of the subset rows: a . x + t = 0 on every
    // point of the subset, so the hyperplane is a . x = -t.
    std::vector<bool> isPivot(d_ + 1, false);
    for (auto p : pivots_) isPivot[p] = true;
    const auto free = static_cast<std::size_t>(
        std::find(isPivot.begin(), isPivot.end(), false) - isPivot.begin());
    RationalRow solution(d_ + 1, Rational(0));
    solution[free] = 1;
    for (std::size_t r = rows_.size(); r-- > 0;) {
      Rational acc = 0;
      for (std::size_t j = 0; j <= d_; ++j) {
        if (j != pivots_[r]) acc += rows_[r][j] * solution[j];
      }
      solution[pivots_[r]] = -acc;
    }
    std::vector<Integer> normal = primitive(solution);
    Integer offset = -normal.back();
    normal.pop_back();
    if (offset < 0) {
      for (auto& a : normal) a = -a;
      offset = -offset;
    }
    if (found_.contains(normal)) return;

    bool anyAbove = false;
    bool anyBelow = false;
    std::vector<std::size_t> incident;
    for (std::size_t k = 0; k < points_.size(); ++k) {
      Integer value = 0;
      for (std::size_t i = 0; i < d_; ++i) value += normal[i] * points_[k].coords[i];
      if (value > offset) anyAbove = true;
      else if (value < offset) anyBelow = true;
      else incident.push_back(k);
      if (anyAbove && anyBelow) return;  // not a supporting hyperplane
    }
    if (offset == 0) {
      throw OriginOnHyperplane("a supporting hyperplane passes through the origin");
    }
    if (anyAbove) {
      throw OriginOnHyperplane("the origin lies outside the convex hull");
    }
    found_.emplace(normal, Facet{normal, offset, std::move(incident)});
  }

  std::span<const LatticeVector> points_;
  std::size_t d_;
  std::vector<RationalRow> rows_;
  std::vector<std::size_t> pivots_;
  std::map<std::vector<Integer>, Facet> found_;
};

std::size_t dimensionOf(std::span<const LatticeVector> points) {
  if (points.empty()) throw DegenerateInput("empty point set");
  const std::size_t d = points.front().dimension();
  if (d == 0) throw DegenerateInput("zero-dimensional points");
  for (const auto& p : points) {
    if (p.dimension() != d) throw InvalidArgument("points of mixed dimension");
  }
  return d;
}

// Calls fn on every lattice point of the bounding box of `points`, which
// contains every lattice point of their hull.
template <typename Fn>
void forEachBoxPoint(std::span<const LatticeVector> points, Fn&& fn) {
  const std::size_t d = points.front().dimension();
  std::vector<int> lo = points.front().coords;
  std::vector<int> hi = lo;
  for (const auto& p : points) {
    for (std::size_t i = 0; i < d; ++i) {
      lo[i] = std::min(lo[i], p.coords[i]);
      hi[i] = std::max(hi[i], p.coords[i]);
    }
  }
  LatticeVector x{lo};
  for (;;) {
    fn(static_cast<const LatticeVector&>(x));
    std::size_t i = 0;
    while (i < d && x.coords[i] == hi[i]) {
      x.coords[i] = lo[i];
      ++i;
    }
    if (i == d) return;
    ++x.coords[i];
  }
}

}  // namespace

std::vector<Facet> enumerateFacets(std::span<const LatticeVector> points) {
  const std::size_t d = dimensionOf(points);
  std::vector<RationalRow> all;
  all.reserve(points.size());
  for (const auto& p : points) all.push_back(homogenize(p));
  if (rank(std::move(all)) != d + 1) {
    throw DegenerateInput("points do not affinely span R^" + std::to_string(d));
  }
  return FacetSearch(points, d).run();
}

Integer evaluate(const Facet& facet, const LatticeVector& point) {
  Integer value = 0;
  for (std::size_t i = 0; i < facet.normal.size(); ++i) {
    value += facet.normal[i] * point.coords[i];
  }
  return value;
}

std::vector<std::size_t> hullVertices(std::span<const LatticeVector> points,
                                      std::span<const Facet> facets) {
  const std::size_t d = dimensionOf(points);
  std::vector<std::vector<RationalRow>> active(points.size());
  for (const auto& f : facets) {
    RationalRow normal(f.normal.begin(), f.normal.end());
    for (auto k : f.incident) active[k].push_back(normal);
  }
  std::vector<std::size_t> vertices;
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (rank(std::move(active[k])) == d) vertices.push_back(k);
  }
  return vertices;
}

bool isFano(std::span<const LatticeVector> points, std::span<const Facet> facets) {
  dimensionOf(points);
  bool fano = true;
  forEachBoxPoint(points, [&](const LatticeVector& x) {
    const bool interior = std::all_of(facets.begin(), facets.end(), [&](const Facet& f) {
      return evaluate(f, x) < f.offset;
    });
    const bool origin = std::all_of(x.coords.begin(), x.coords.end(),
                                    [](int c) { return c == 0; });
    if (interior != origin) fano = false;
  });
  return fano;
}

bool isFano(std::span<const LatticeVector> points) {
  try {
    const auto facets = enumerateFacets(points);
    return isFano(points, facets);
  } catch (const OriginOnHyperplane&) {
    return false;
  }
}

bool isTerminal(std::span<const LatticeVector> points, std::span<const Facet> facets) {
  dimensionOf(points);
  std::vector<LatticeVector> vertices;
  for (auto k : hullVertices(points, facets)) vertices.push_back(points[k]);
  std::sort(vertices.begin(), vertices.end());
  bool terminal = true;
  forEachBoxPoint(points, [&](const LatticeVector& x) {
    const bool inside = std::all_of(facets.begin(), facets.end(), [&](const Facet& f) {
      return evaluate(f, x) <= f.offset;
    });
    if (!inside) return;
    const bool origin = std::all_of(x.coords.begin(), x.coords.end(),
                                    [](int c) { return c == 0; });
    if (!origin && !std::binary_search(vertices.begin(), vertices.end(), x)) {
      terminal = false;
    }
  });
  return terminal;
}

bool isTerminal(std::span<const LatticeVector> points) {
  const auto facets = enumerateFacets(points);
  return isTerminal(points, facets);
}

bool isGorenstein(std::span<const Facet> facets) {
  return std::all_of(facets.begin(), facets.end(),
                     [](const Facet& f) { return f.offset == 1; });
}

bool isSimplicial(std::span<const Facet> facets) {
  return std::all_of(facets.begin(), facets.end(), [](const Facet& f) {
    return f.incident.size() == f.normal.size();
  });
}

bool isSmoothGeometric(std::span<const LatticeVector> points,
                       std::span<const Facet> facets) {
  if (!isSimplicial(facets)) return false;
  return std::all_of(facets.begin(), facets.end(), [&](const Facet& f) {
    std::vector<std::vector<Integer>> m;
    for (auto k : f.incident) {
      m.emplace_back(points[k].coords.begin(), points[k].coords.end());
    }
    return abs(determinant(std::move(m))) == 1;
  });
}

Integer determinant(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw InvalidArgument("determinant of a non-square matrix");
  }
  if (n == 0) return 1;
  int sign = 1;
  Integer previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Bareiss: the division is exact.
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / previous;
      }
    }
    previous = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

GeometricReport analyzeGeometry(std::span<const LatticeVector> points) {
  GeometricReport report;
  report.facets = enumerateFacets(points);
  report.fano = isFano(points, report.facets);
  report.terminal = isTerminal(points, report.facets);
  report.gorenstein = isGorenstein(report.facets);
  report.simplicial = isSimplicial(report.facets);
  report.smooth = isSmoothGeometric(points, report.facets);
  return report;
}

}  // namespace qposet
