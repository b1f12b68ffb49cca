#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "qposet/poset.hpp"

namespace qposet {

/// Parses a poset in either supported format.
///
/// Text: first line `d`, then one `i j` per line meaning y_i < y_j; blank
/// lines and lines starting with `#` are ignored. JSON (detected by a leading
/// `{`): `{"d": 3, "relations": [[1,2]]}`. Relations may be covers or any
/// relations; the order is their transitive closure.
///
/// Errors are reported as ParseError citing `source` and the line.
Poset parsePoset(std::string_view text, const std::string& source = "<input>");

Poset readPosetFile(const std::filesystem::path& path);

/// Text format listing the cover relations.
std::string formatPosetText(const Poset& p);

}  // namespace qposet
