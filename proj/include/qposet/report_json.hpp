#pragma once

#include <span>

#include <json.hpp>

#include "qposet/classifier.hpp"
#include "qposet/enumerate.hpp"
#include "qposet/geometry.hpp"
#include "qposet/polytope.hpp"
#include "qposet/walk.hpp"

// JSON schema (stable; see README):
//   walk:     {"kind": "cycle"|"path", "elements": [int], "steps": ["up"|"down"]}
//   classify: {"d", "fano", "terminal", "gorenstein", "q_factorial", "smooth",
//              "method", "witness": walk|null[, "witnesses": [walk]]}
//   vertices: {"d", "vertices": [{"edge": [lower, upper], "vector": [int]}]}
//   oracle:   {"d", "vertices": [[int]], "facets": [{"normal", "offset",
//              "incident"}], "fano", "terminal", "gorenstein", "simplicial",
//              "smooth"}
//   table:    {"rows": [{"d", "posets", "smooth"}]}

namespace qposet {

nlohmann::json toJson(const Walk& w);
nlohmann::json toJson(const ClassificationReport& report, int d, bool includeAll);
nlohmann::json toJson(const PolytopeVertexSet& set);
nlohmann::json toJson(std::span<const LatticeVector> points, const GeometricReport& report);
nlohmann::json toJson(std::span<const TableRow> rows);

}  // namespace qposet
