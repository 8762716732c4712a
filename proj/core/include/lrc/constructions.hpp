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

#include <optional>
#include <string>
#include <vector>

#include "lrc/bounds.hpp"
#include "lrc/coord_set.hpp"
#include "lrc/linear_code.hpp"
#include "lrc/locality.hpp"

namespace lrc {

// Simplex code S(m, q): one column per point of PG(m-1, q), scaled so the
// first nonzero entry is 1, in lexicographic order (top entry most
// significant). Throws std::invalid_argument for m < 2 or an invalid q.
LinearCode simplex(int m, int q);

// True iff the columns of the generator are nonzero, pairwise independent
// and number (q^k - 1) / (q - 1), i.e. the code is S(k, q) up to column order.
bool is_simplex(const LinearCode& code);

struct NamedCode {
  std::string name;
  LinearCode code;
  // Expected parameters.
  int n = 0;
  int k = 0;
  int d = 0;
  int delta = 0;
  // Declared repair sets and the locality they induce.
  std::vector<CoordSet> repair_sets;
  int declared_r = 0;
  int declared_kappa = 0;
  // Bound the code is expected to meet with equality:
  // "singleton_g", "cmg_kappa" or "cmg_r".
  std::string meets;
};

// The three worked examples (which in {1, 2, 3}). Throws std::out_of_range otherwise.
NamedCode paper_example(int which);

struct OptimalityReport {
  std::string name;
  int n = 0;
  int k = 0;
  Distance d;
  int delta = 0;
  LocalityProfile computed;
  LocalityProfile declared;
  // Bounds evaluated at the computed r and kappa.
  int singleton_g = 0;
  BoundReport cmg_kappa;
  BoundReport cmg_r;
  // Names of the bounds met with equality.
  std::vector<std::string> met;

  bool meets(const std::string& bound) const;
};

// Computes the locality profile at delta (the code's own delta when not
// given), evaluates the bounds and records which are tight.
OptimalityReport verify_optimality(const NamedCode& named, std::optional<int> delta = std::nullopt,
                                   std::optional<int> size_cap = std::nullopt,
                                   std::uint64_t max_codewords = kDefaultMaxCodewords);

}  // namespace lrc
