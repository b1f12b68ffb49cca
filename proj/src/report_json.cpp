#include "qposet/report_json.hpp"

#include <limits>

namespace qposet {

namespace {

nlohmann::json integerJson(const Integer& value) {
  if (value >= std::numeric_limits<long long>::min() &&
      value <= std::numeric_limits<long long>::max()) {
    return static_cast<long long>(value);
  }
  return value.str();
}

}  // namespace

nlohmann::json toJson(const Walk& w) {
  nlohmann::json steps = nlohmann::json::array();
  for (Step s : w.steps) steps.push_back(s == Step::Up ? "up" : "down");
  return {{"kind", w.kind == WalkKind::Cycle ? "cycle" : "path"},
          {"elements", w.elements},
          {"steps", std::move(steps)}};
}

nlohmann::json toJson(const ClassificationReport& report, int d, bool includeAll) {
  nlohmann::json j = {{"d", d},
                      {"fano", report.fano},
                      {"terminal", report.terminal},
                      {"gorenstein", report.gorenstein},
                      {"q_factorial", report.qFactorial},
                      {"smooth", report.smooth},
                      {"method", toString(report.method)},
                      {"witness", report.witness ? toJson(*report.witness) : nullptr}};
  if (includeAll) {
    nlohmann::json all = nlohmann::json::array();
    for (const auto& w : report.witnesses) all.push_back(toJson(w));
    j["witnesses"] = std::move(all);
  }
  return j;
}

nlohmann::json toJson(const PolytopeVertexSet& set) {
  nlohmann::json vertices = nlohmann::json::array();
  for (std::size_t k = 0; k < set.vertices.size(); ++k) {
    const auto& e = set.edgeOfVertex[k];
    vertices.push_back({{"edge", {e.lower, e.upper}}, {"vector", set.vertices[k].coords}});
  }
  return {{"d", set.d}, {"vertices", std::move(vertices)}};
}

nlohmann::json toJson(std::span<const LatticeVector> points, const GeometricReport& report) {
  nlohmann::json vertices = nlohmann::json::array();
  for (const auto& p : points) vertices.push_back(p.coords);
  nlohmann::json facets = nlohmann::json::array();
  for (const auto& f : report.facets) {
    nlohmann::json normal = nlohmann::json::array();
    for (const auto& a : f.normal) normal.push_back(integerJson(a));
    facets.push_back({{"normal", std::move(normal)},
                      {"offset", integerJson(f.offset)},
                      {"incident", f.incident}});
  }
  const int d = points.empty() ? 0 : static_cast<int>(points.front().dimension());
  return {{"d", d},
          {"vertices", std::move(vertices)},
          {"facets", std::move(facets)},
          {"fano", report.fano},
          {"terminal", report.terminal},
          {"gorenstein", report.gorenstein},
          {"simplicial", report.simplicial},
          {"smooth", report.smooth}};
}

nlohmann::json toJson(std::span<const TableRow> rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows) {
    out.push_back({{"d", r.d}, {"posets", r.posetCount}, {"smooth", r.smoothCount}});
  }
  return {{"rows", std::move(out)}};
}

}  // namespace qposet
