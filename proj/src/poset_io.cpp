#include "qposet/poset_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "qposet/error.hpp"

namespace qposet {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Parses whitespace-separated integers; returns false on any stray token.
bool parseInts(std::string_view line, std::vector<long>& out) {
  out.clear();
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos == line.size()) break;
    long value = 0;
    const auto [ptr, ec] =
        std::from_chars(line.data() + pos, line.data() + line.size(), value);
    if (ec != std::errc{}) return false;
    pos = static_cast<std::size_t>(ptr - line.data());
    if (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') return false;
    out.push_back(value);
  }
  return true;
}

Poset build(long d, const std::vector<Relation>& relations,
            const std::string& source, std::size_t line) {
  try {
    return Poset::fromCoverRelations(static_cast<int>(d), relations);
  } catch (const CycleInInput&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(source, line, e.what());
  }
}

Poset parseJson(std::string_view text, const std::string& source) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(source, 1, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("d") || !doc["d"].is_number_integer()) {
    throw ParseError(source, 1, "expected an object with integer field \"d\"");
  }
  const long d = doc["d"].get<long>();
  if (d < 1 || d > kMaxElements) {
    throw ParseError(source, 1, "d out of range: " + std::to_string(d));
  }
  std::vector<Relation> relations;
  if (doc.contains("relations")) {
    const auto& rels = doc["relations"];
    if (!rels.is_array()) throw ParseError(source, 1, "\"relations\" must be an array");
    for (const auto& r : rels) {
      if (!r.is_array() || r.size() != 2 || !r[0].is_number_integer() ||
          !r[1].is_number_integer()) {
        throw ParseError(source, 1, "each relation must be a pair of integers");
      }
      const long i = r[0].get<long>();
      const long j = r[1].get<long>();
      if (i < 1 || i > d || j < 1 || j > d) {
        throw ParseError(source, 1,
                         "relation [" + std::to_string(i) + "," +
                             std::to_string(j) + "] out of range");
      }
      relations.push_back({static_cast<int>(i), static_cast<int>(j)});
    }
  }
  return build(d, relations, source, 1);
}

}  // namespace

Poset parsePoset(std::string_view text, const std::string& source) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    return parseJson(text, source);
  }

  long d = 0;
  bool haveSize = false;
  std::vector<Relation> relations;
  std::vector<long> ints;
  std::size_t lineNo = 0;
  std::size_t lastLine = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const auto line = trim(text.substr(pos, end - pos));
    ++lineNo;
    pos = end + 1;
    if (line.empty() || line.front() == '#') continue;
    lastLine = lineNo;
    if (!parseInts(line, ints)) {
      throw ParseError(source, lineNo, "expected integers, got '" + std::string(line) + "'");
    }
    if (!haveSize) {
      if (ints.size() != 1) throw ParseError(source, lineNo, "first line must hold d");
      d = ints[0];
      if (d < 1 || d > kMaxElements) {
        throw ParseError(source, lineNo, "d out of range: " + std::to_string(d));
      }
      haveSize = true;
      continue;
    }
    if (ints.size() != 2) {
      throw ParseError(source, lineNo, "expected a relation 'i j'");
    }
    if (ints[0] < 1 || ints[0] > d || ints[1] < 1 || ints[1] > d) {
      throw ParseError(source, lineNo,
                       "element out of range 1.." + std::to_string(d));
    }
    relations.push_back({static_cast<int>(ints[0]), static_cast<int>(ints[1])});
  }
  if (!haveSize) throw ParseError(source, lineNo, "missing size line");
  return build(d, relations, source, lastLine);
}

Poset readPosetFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), 0, "cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parsePoset(buffer.str(), path.string());
}

std::string formatPosetText(const Poset& p) {
  std::string out = std::to_string(p.size()) + "\n";
  for (const auto& r : p.covers()) {
    out += std::to_string(r.lower) + " " + std::to_string(r.upper) + "\n";
  }
  return out;
}

}  // namespace qposet
