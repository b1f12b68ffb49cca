#include "qposet/cli.hpp"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <mutex>
#include <ostream>
#include <vector>

#include <CLI11.hpp>

#include "qposet/classifier.hpp"
#include "qposet/enumerate.hpp"
#include "qposet/error.hpp"
#include "qposet/geometry.hpp"
#include "qposet/parallel.hpp"
#include "qposet/poset_io.hpp"
#include "qposet/polytope.hpp"
#include "qposet/report_json.hpp"

namespace qposet {

namespace {

constexpr const char* kCommands =
    "commands: classify, vertices, oracle, cross-check, table, enumerate";

int runClassify(const std::string& file, const ClassifyOptions& options,
                std::ostream& out) {
  const Poset p = readPosetFile(file);
  const auto report = classify(p, options);
  out << toJson(report, p.size(), options.allWitnesses).dump(2) << '\n';
  return kExitOk;
}

int runVertices(const std::string& file, bool json, std::ostream& out) {
  const Poset p = readPosetFile(file);
  const auto set = buildVertexSet(hat(p));
  if (json) {
    out << toJson(set).dump(2) << '\n';
    return kExitOk;
  }
  for (const auto& v : set.vertices) {
    for (std::size_t i = 0; i < v.coords.size(); ++i) {
      out << (i ? "," : "") << v.coords[i];
    }
    out << '\n';
  }
  return kExitOk;
}

int runOracle(const std::string& file, std::ostream& out) {
  const Poset p = readPosetFile(file);
  const auto vertices = buildVertexSet(hat(p)).vertices;
  const auto report = analyzeGeometry(vertices);
  out << toJson(std::span<const LatticeVector>(vertices), report).dump(2) << '\n';
  return kExitOk;
}

struct Disagreement {
  Poset poset;
  ClassificationReport combinatorial;
  bool simplicial = false;
  bool smooth = false;
};

int runCrossCheck(int d, unsigned jobs, bool json, std::ostream& out, std::ostream& err) {
  const auto posets = enumeratePosets(d);
  err << "cross-check: " << posets.size() << " isomorphism classes at d=" << d << '\n';
  std::mutex mutex;
  std::map<std::size_t, Disagreement> disagreements;
  parallelFor(posets.size(), jobs, [&](std::size_t i) {
    const auto report = classify(posets[i]);
    const auto vertices = buildVertexSet(hat(posets[i])).vertices;
    const auto facets = enumerateFacets(vertices);
    const bool simplicial = isSimplicial(facets);
    const bool smooth = isSmoothGeometric(vertices, facets);
    if (report.qFactorial != simplicial || report.smooth != smooth) {
      std::lock_guard lock(mutex);
      disagreements.emplace(i, Disagreement{posets[i], report, simplicial, smooth});
    }
  });
  if (json) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& [i, dis] : disagreements) {
      list.push_back({{"poset", formatPosetText(dis.poset)},
                      {"classifier_q_factorial", dis.combinatorial.qFactorial},
                      {"classifier_smooth", dis.combinatorial.smooth},
                      {"geometric_simplicial", dis.simplicial},
                      {"geometric_smooth", dis.smooth}});
    }
    out << nlohmann::json{{"d", d},
                          {"posets", posets.size()},
                          {"disagreements", std::move(list)}}
               .dump(2)
        << '\n';
  } else {
    for (const auto& [i, dis] : disagreements) {
      out << "# disagreement: classifier smooth=" << dis.combinatorial.smooth
          << " q_factorial=" << dis.combinatorial.qFactorial
          << ", geometry smooth=" << dis.smooth << " simplicial=" << dis.simplicial
          << '\n'
          << formatPosetText(dis.poset);
    }
    out << "d=" << d << ": " << posets.size() << " posets, " << disagreements.size()
        << " disagreements\n";
  }
  return disagreements.empty() ? kExitOk : kExitDomainError;
}

int runTable(int maxD, unsigned jobs, const std::string& outFile, bool json,
             std::ostream& out, std::ostream& err) {
  TableOptions options;
  options.jobs = jobs;
  if (!outFile.empty()) {
    options.known = readTableCsv(outFile);
    if (!options.known.empty()) {
      err << "table: resuming with " << options.known.size() << " rows from "
          << outFile << '\n';
    }
  }
  options.onRow = [&](const TableRow& row) {
    err << "table: d=" << row.d << " posets=" << row.posetCount
        << " smooth=" << row.smoothCount << '\n';
    if (!outFile.empty()) appendTableCsv(outFile, row);
  };
  const auto rows = buildTable(maxD, options);
  if (json) {
    out << toJson(std::span<const TableRow>(rows)).dump(2) << '\n';
    return kExitOk;
  }
  out << std::setw(3) << "d" << std::setw(9) << "posets" << std::setw(9) << "smooth" << '\n';
  for (const auto& r : rows) {
    out << std::setw(3) << r.d << std::setw(9) << r.posetCount << std::setw(9)
        << r.smoothCount << '\n';
  }
  return kExitOk;
}

int runEnumerate(int d, const std::string& dir, bool upToDuality, bool json,
                 std::ostream& out) {
  auto posets = enumeratePosets(d);
  if (upToDuality) posets = quotientByDuality(posets).representatives;
  std::filesystem::create_directories(dir);
  nlohmann::json files = nlohmann::json::array();
  for (const auto& p : posets) {
    const auto name = canonicalKey(p).hex() + ".poset";
    const auto path = std::filesystem::path(dir) / name;
    std::ofstream file(path);
    if (!file) throw Error("cannot write " + path.string());
    file << formatPosetText(p);
    files.push_back(name);
  }
  if (json) {
    out << nlohmann::json{{"d", d}, {"count", posets.size()}, {"files", std::move(files)}}
               .dump(2)
        << '\n';
  } else {
    out << "wrote " << posets.size() << " posets to " << dir << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lattice polytopes of finite posets: construction, classification, "
               "enumeration"};
  app.name("qposet");
  app.require_subcommand(1);

  std::string file;
  bool json = false;
  unsigned jobs = 0;

  ClassifyOptions classifyOptions;
  std::string method = "combinatorial";
  auto* classifyCmd = app.add_subcommand("classify", "Decide smoothness of Q_P (JSON report)");
  classifyCmd->add_option("file", file, "Poset file")->required();
  classifyCmd->add_flag("--all-witnesses", classifyOptions.allWitnesses,
                        "Report every certifying walk");
  classifyCmd->add_flag("--verify", classifyOptions.verify,
                        "Recompute Fano/terminal/Gorenstein from the facets");
  classifyCmd->add_option("--method", method, "combinatorial | geometric | pure-shortcut")
      ->check(CLI::IsMember({"combinatorial", "geometric", "pure-shortcut"}));
  classifyCmd->add_flag("--json", json, "Accepted for uniformity; output is JSON");

  auto* verticesCmd = app.add_subcommand("vertices", "List the vertices of Q_P");
  verticesCmd->add_option("file", file, "Poset file")->required();
  verticesCmd->add_flag("--json", json, "JSON with producing edges");

  auto* oracleCmd = app.add_subcommand("oracle", "Facets and geometric flags of Q_P (JSON)");
  oracleCmd->add_option("file", file, "Poset file")->required();
  oracleCmd->add_flag("--json", json, "Accepted for uniformity; output is JSON");

  int d = 0;
  auto* crossCmd =
      app.add_subcommand("cross-check", "Compare classifier and geometry on all posets of size d");
  crossCmd->add_option("--d", d, "Poset size")->required()->check(CLI::Range(1, kMaxEnumerationSize));
  crossCmd->add_option("--jobs", jobs, "Worker threads (0 = all cores)");
  crossCmd->add_flag("--json", json, "JSON output");

  int maxD = 0;
  std::string outFile;
  auto* tableCmd = app.add_subcommand("table", "Count posets and smooth Q_P up to duality");
  tableCmd->add_option("--max-d", maxD, "Largest size")
      ->required()
      ->check(CLI::Range(1, kMaxEnumerationSize));
  tableCmd->add_option("--jobs", jobs, "Worker threads (0 = all cores)");
  tableCmd->add_option("--out", outFile, "Results CSV (resumed if present)");
  tableCmd->add_flag("--json", json, "JSON output");

  std::string emitDir;
  bool upToDuality = false;
  auto* enumerateCmd = app.add_subcommand("enumerate", "Write one poset file per class");
  enumerateCmd->add_option("--d", d, "Poset size")->required()->check(CLI::Range(1, kMaxEnumerationSize));
  enumerateCmd->add_option("--emit", emitDir, "Output directory")->required();
  enumerateCmd->add_flag("--up-to-duality", upToDuality, "Keep one class per dual pair");
  enumerateCmd->add_flag("--json", json, "JSON output");

  std::vector<const char*> argv{"qposet"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << kCommands << '\n';
    return kExitUsage;
  }

  if (method == "geometric") classifyOptions.method = ClassifyMethod::Geometric;
  else if (method == "pure-shortcut") classifyOptions.method = ClassifyMethod::PureShortcut;

  try {
    if (*classifyCmd) return runClassify(file, classifyOptions, out);
    if (*verticesCmd) return runVertices(file, json, out);
    if (*oracleCmd) return runOracle(file, out);
    if (*crossCmd) return runCrossCheck(d, jobs, json, out, err);
    if (*tableCmd) return runTable(maxD, jobs, outFile, json, out, err);
    if (*enumerateCmd) return runEnumerate(d, emitDir, upToDuality, json, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
  err << kCommands << '\n';
  return kExitUsage;
}

}  // namespace qposet
