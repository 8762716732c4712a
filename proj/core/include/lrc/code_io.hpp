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

#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "lrc/coord_set.hpp"
#include "lrc/linear_code.hpp"

namespace lrc {

// Malformed code file. The message names the line or the offending field.
class CodeFormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A code read from JSON:
//
//   {"q": 2, "k": 3, "n": 7,
//    "generator": [[1,0,0,1,1,0,1], ...],   // k rows of n field-element indices
//    "repair_sets": [[1,2,3], ...]}          // optional, 1-based
//
// "name" and "delta" are optional.
struct CodeFile {
  std::string name;
  LinearCode code;
  std::vector<CoordSet> repair_sets;
  std::optional<int> delta;
  std::vector<std::string> warnings;
};

CodeFile parse_code_json(std::string_view text);
// Throws CodeFormatError for unreadable files too.
CodeFile load_code_file(const std::filesystem::path& path);

nlohmann::json code_to_json(const LinearCode& code, const std::vector<CoordSet>& repair_sets = {},
                            const std::string& name = "", std::optional<int> delta = std::nullopt);

}  // namespace lrc
