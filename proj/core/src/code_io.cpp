// Copyright 2026 The lrc-bounds Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lrc/code_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

namespace lrc {
namespace {

using nlohmann::json;

std::pair<int, int> line_and_column(std::string_view text, std::size_t offset) {
  int line = 1;
  int col = 1;
  for (std::size_t i = 0; i < std::min(offset, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

int int_field(const json& doc, const char* key) {
  if (!doc.contains(key)) throw CodeFormatError(fmt::format("field '{}': missing", key));
  const json& v = doc.at(key);
  if (!v.is_number_integer()) throw CodeFormatError(fmt::format("field '{}': expected an integer", key));
  return v.get<int>();
}

}  // namespace

CodeFile parse_code_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // byte is one past the offending character.
    const auto [line, col] = line_and_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw CodeFormatError(fmt::format("line {}, column {}: invalid JSON", line, col));
  }
  if (!doc.is_object()) throw CodeFormatError("top level: expected an object");

  const int q = int_field(doc, "q");
  const int k = int_field(doc, "k");
  const int n = int_field(doc, "n");
  if (n < 1) throw CodeFormatError(fmt::format("field 'n': length {} must be positive", n));
  if (k < 0) throw CodeFormatError(fmt::format("field 'k': dimension {} must be nonnegative", k));

  std::optional<GaloisField> field;
  try {
    field.emplace(q);
  } catch (const std::invalid_argument& e) {
    throw CodeFormatError(fmt::format("field 'q': {}", e.what()));
  }

  if (!doc.contains("generator")) throw CodeFormatError("field 'generator': missing");
  const json& rows = doc.at("generator");
  if (!rows.is_array()) throw CodeFormatError("field 'generator': expected an array of rows");
  if (static_cast<int>(rows.size()) != k) {
    throw CodeFormatError(fmt::format("field 'generator': {} rows but k = {}", rows.size(), k));
  }
  Matrix g(k, n);
  for (int i = 0; i < k; ++i) {
    const json& row = rows[i];
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw CodeFormatError(fmt::format("field 'generator' row {}: expected {} entries", i + 1, n));
    }
    for (int j = 0; j < n; ++j) {
      const json& v = row[j];
      if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() >= q) {
        throw CodeFormatError(
            fmt::format("field 'generator' row {}, column {}: expected an element index in [0, {})", i + 1, j + 1, q));
      }
      g.at(i, j) = static_cast<Elem>(v.get<int>());
    }
  }

  CodeFile out{doc.value("name", std::string{}), LinearCode(*field, std::move(g)), {}, std::nullopt, {}};
  if (out.code.rank_deficient()) {
    out.warnings.push_back(fmt::format("generator has rank {} < k = {}; analysing the rank-{} code",
                                       out.code.dimension(), k, out.code.dimension()));
  }
  if (doc.contains("delta")) out.delta = int_field(doc, "delta");

  if (doc.contains("repair_sets")) {
    const json& sets = doc.at("repair_sets");
    if (!sets.is_array()) throw CodeFormatError("field 'repair_sets': expected an array of coordinate lists");
    for (std::size_t s = 0; s < sets.size(); ++s) {
      const json& set = sets[s];
      if (!set.is_array()) throw CodeFormatError(fmt::format("field 'repair_sets' entry {}: expected an array", s + 1));
      std::vector<int> members;
      for (const json& v : set) {
        if (!v.is_number_integer()) {
          throw CodeFormatError(fmt::format("field 'repair_sets' entry {}: expected integers", s + 1));
        }
        members.push_back(v.get<int>());
      }
      try {
        out.repair_sets.push_back(CoordSet::from_one_based(members, n));
      } catch (const std::exception& e) {
        throw CodeFormatError(fmt::format("field 'repair_sets' entry {}: {}", s + 1, e.what()));
      }
    }
  }
  return out;
}

CodeFile load_code_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CodeFormatError(fmt::format("{}: cannot open file", path.string()));
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_code_json(buf.str());
  } catch (const CodeFormatError& e) {
    throw CodeFormatError(fmt::format("{}: {}", path.string(), e.what()));
  }
}

json code_to_json(const LinearCode& code, const std::vector<CoordSet>& repair_sets, const std::string& name,
                  std::optional<int> delta) {
  json doc;
  if (!name.empty()) doc["name"] = name;
  doc["q"] = code.q();
  doc["k"] = code.dimension();
  doc["n"] = code.length();
  json rows = json::array();
  for (const auto& row : code.generator().to_rows()) {
    json r = json::array();
    for (Elem e : row) r.push_back(static_cast<int>(e));
    rows.push_back(std::move(r));
  }
  doc["generator"] = std::move(rows);
  if (delta) doc["delta"] = *delta;
  if (!repair_sets.empty()) {
    json sets = json::array();
    for (const auto& s : repair_sets) sets.push_back(s.to_one_based());
    doc["repair_sets"] = std::move(sets);
  }
  return doc;
}

}  // namespace lrc
